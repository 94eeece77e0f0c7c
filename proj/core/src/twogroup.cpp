#include "layercake/twogroup.hpp"

#include <functional>
#include <map>
#include <string>

namespace layercake {

namespace {

std::string elem_label(const AbElem& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "." : "") + std::to_string(a[i]);
  return s.empty() ? "0" : s;
}

void require(bool ok, const char* name, const std::string& what) {
  if (!ok) throw Error(name, what);
}

}  // namespace

FinMonoidalGroupoid FinMonoidalGroupoid::make(CategoryPtr category, std::vector<Obj> object_tensor,
                                              std::vector<Mor> morphism_tensor, Obj unit,
                                              std::vector<Mor> associator, std::optional<LoopCoordinates> loops) {
  const FinCategory& c = *category;
  const std::size_t n = c.num_objects();
  const std::size_t m = c.num_morphisms();
  require(is_groupoid(c), "MonoidalViolation", "underlying category is not a groupoid");
  require(object_tensor.size() == n * n && morphism_tensor.size() == m * m && associator.size() == n * n * n &&
              unit < n,
          "MonoidalViolation", "tensor, unit or associator tables have the wrong size");
  for (Obj x : object_tensor) require(x < n, "MonoidalViolation", "object tensor leaves the object set");
  for (Mor f : morphism_tensor) require(f < m, "MonoidalViolation", "morphism tensor leaves the morphism set");
  for (Mor f : associator) require(f < m, "MonoidalViolation", "associator component is not a morphism");

  auto ot = [&](Obj x, Obj y) { return object_tensor[x * n + y]; };
  auto mt = [&](Mor f, Mor g) { return morphism_tensor[f * m + g]; };
  auto as = [&](Obj x, Obj y, Obj z) { return associator[(x * n + y) * n + z]; };

  for (Mor f = 0; f < m; ++f) {
    for (Mor g = 0; g < m; ++g) {
      require(c.src(mt(f, g)) == ot(c.src(f), c.src(g)) && c.tgt(mt(f, g)) == ot(c.tgt(f), c.tgt(g)),
              "MonoidalViolation", "tensor of " + c.morphism_label(f) + " and " + c.morphism_label(g) +
                                       " has the wrong endpoints");
    }
  }
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      require(mt(c.identity(x), c.identity(y)) == c.identity(ot(x, y)), "MonoidalViolation",
              "tensor does not preserve identities");
    }
  }
  std::vector<std::pair<Mor, Mor>> composable;  // (second, first)
  for (Mor f = 0; f < m; ++f) {
    for (Mor g : c.hom(c.tgt(f), c.tgt(f))) composable.emplace_back(g, f);
    for (Obj y = 0; y < n; ++y) {
      if (y == c.tgt(f)) continue;
      for (Mor g : c.hom(c.tgt(f), y)) composable.emplace_back(g, f);
    }
  }
  for (const auto& [f2, f1] : composable) {
    for (const auto& [g2, g1] : composable) {
      require(mt(c.compose(f2, f1), c.compose(g2, g1)) == c.compose(mt(f2, g2), mt(f1, g1)), "MonoidalViolation",
              "interchange law fails");
    }
  }
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj z = 0; z < n; ++z) {
        const Mor a = as(x, y, z);
        require(c.src(a) == ot(ot(x, y), z) && c.tgt(a) == ot(x, ot(y, z)), "MonoidalViolation",
                "associator component has the wrong endpoints");
      }
    }
  }
  for (Mor f = 0; f < m; ++f) {
    for (Mor g = 0; g < m; ++g) {
      for (Mor h = 0; h < m; ++h) {
        const Mor lhs = c.compose(as(c.tgt(f), c.tgt(g), c.tgt(h)), mt(mt(f, g), h));
        const Mor rhs = c.compose(mt(f, mt(g, h)), as(c.src(f), c.src(g), c.src(h)));
        require(lhs == rhs, "MonoidalViolation", "associator is not natural");
      }
    }
  }
  for (Obj x = 0; x < n; ++x) {
    require(ot(unit, x) == x && ot(x, unit) == x, "UnitNotStrict", "unit is not strict on objects");
    for (Obj y = 0; y < n; ++y) {
      require(as(x, unit, y) == c.identity(ot(x, y)), "UnitNotStrict", "triangle component is not an identity");
    }
  }
  for (Mor f = 0; f < m; ++f) {
    require(mt(c.identity(unit), f) == f && mt(f, c.identity(unit)) == f, "UnitNotStrict",
            "unit is not strict on morphisms");
  }
  if (loops) {
    const auto hom = c.hom(unit, unit);
    require(loops->of_loop.size() == hom.size() && BigInt(hom.size()) == loops->group.order(), "MonoidalViolation",
            "loop coordinates must biject with the loops at the unit");
    std::map<AbElem, std::size_t> index;
    for (std::size_t i = 0; i < hom.size(); ++i) {
      require(loops->group.contains(loops->of_loop[i]), "MonoidalViolation", "loop coordinate out of range");
      index.emplace(loops->of_loop[i], i);
    }
    require(index.size() == hom.size(), "MonoidalViolation", "loop coordinates repeat");
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = 0; j < hom.size(); ++j) {
        const Mor composite = c.compose(hom[i], hom[j]);
        const auto pos = static_cast<std::size_t>(std::find(hom.begin(), hom.end(), composite) - hom.begin());
        require(loops->of_loop[pos] == loops->group.add(loops->of_loop[i], loops->of_loop[j]), "MonoidalViolation",
                "loop coordinates do not respect composition");
      }
    }
  }
  FinMonoidalGroupoid t;
  t.category_ = std::move(category);
  t.object_tensor_ = std::move(object_tensor);
  t.morphism_tensor_ = std::move(morphism_tensor);
  t.unit_ = unit;
  t.associator_ = std::move(associator);
  t.loops_ = std::move(loops);
  return t;
}

FinMonoidalGroupoid build_from_data(const SkeletalTwoGroup& t) {
  const FinGroup& g = t.pi1();
  const FinAbGroup& a = t.pi2();
  const GModule& mod = t.module;
  require(t.alpha.degree == 3 && t.alpha.normalized &&
              t.alpha.values.size() == cochain_length(g, 3) ,
          "DegreeMismatch", "associator must be a normalized 3-cochain");
  const auto elems = a.elements();
  std::map<AbElem, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::size_t k = elems.size();
  auto mor = [&](Elem x, const AbElem& v) { return x * k + index.at(v); };

  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> identities;
  for (Elem x = 0; x < g.order(); ++x) {
    objects.push_back(std::to_string(x));
    identities.push_back(mor(x, a.zero()));
    for (const auto& v : elems) morphisms.push_back({"(" + std::to_string(x) + "," + elem_label(v) + ")", x, x});
  }
  auto category = share(FinCategory::from_rule(std::move(objects), std::move(morphisms), std::move(identities),
                                               [&](Mor f2, Mor f1) {
                                                 return mor(f1 / k, a.add(elems[f2 % k], elems[f1 % k]));
                                               }));
  const std::size_t n = g.order();
  const std::size_t m = n * k;
  std::vector<Obj> object_tensor(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) object_tensor[x * n + y] = g.mul(x, y);
  }
  std::vector<Mor> morphism_tensor(m * m);
  for (Mor f = 0; f < m; ++f) {
    for (Mor h = 0; h < m; ++h) {
      const Elem x = f / k;
      const Elem y = h / k;
      morphism_tensor[f * m + h] = mor(g.mul(x, y), a.add(elems[f % k], mod.act(x, elems[h % k])));
    }
  }
  std::vector<Mor> associator(n * n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const std::array<Elem, 3> args{x, y, z};
        associator[(x * n + y) * n + z] = mor(g.mul(g.mul(x, y), z), t.alpha.value_at(mod, args));
      }
    }
  }
  LoopCoordinates loops{a, {}};
  for (Mor f : category->hom(g.identity(), g.identity())) loops.of_loop.push_back(elems[f % k]);
  return FinMonoidalGroupoid::make(std::move(category), std::move(object_tensor), std::move(morphism_tensor),
                                   g.identity(), std::move(associator), std::move(loops));
}

PentagonVerdict check_pentagon(const FinMonoidalGroupoid& t) {
  const FinCategory& c = t.category();
  const std::size_t n = c.num_objects();
  for (Obj w = 0; w < n; ++w) {
    for (Obj x = 0; x < n; ++x) {
      for (Obj y = 0; y < n; ++y) {
        for (Obj z = 0; z < n; ++z) {
          const Mor lhs = c.compose(
              t.tensor_morphisms(c.identity(w), t.associator(x, y, z)),
              c.compose(t.associator(w, t.tensor(x, y), z), t.tensor_morphisms(t.associator(w, x, y), c.identity(z))));
          const Mor rhs = c.compose(t.associator(w, x, t.tensor(y, z)), t.associator(t.tensor(w, x), y, z));
          if (lhs != rhs) return {false, std::array<Obj, 4>{w, x, y, z}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SkeletalTwoGroup skeletal_data(const FinMonoidalGroupoid& t) {
  const FinCategory& c = t.category();
  const std::size_t n = c.num_objects();
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      if (x != y && !c.hom(x, y).empty()) {
        throw Error("NotSkeletal", "objects " + c.object_label(x) + " and " + c.object_label(y) + " are isomorphic");
      }
    }
  }
  const Obj e = t.unit();
  for (Obj x = 0; x < n; ++x) {
    require(t.tensor(e, x) == x && t.tensor(x, e) == x, "UnitNotStrict", "unit is not strict");
  }
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) table[x][y] = t.tensor(x, y);
  }
  FinGroup g = FinGroup::from_table(std::move(table));

  const auto loops_span = c.hom(e, e);
  const std::vector<Mor> loops(loops_span.begin(), loops_span.end());
  FinAbGroup a;
  std::vector<AbElem> coord(loops.size());
  if (t.loops()) {
    a = t.loops()->group;
    coord = t.loops()->of_loop;
  } else {
    std::vector<std::vector<Elem>> aut(loops.size(), std::vector<Elem>(loops.size()));
    for (std::size_t i = 0; i < loops.size(); ++i) {
      for (std::size_t j = 0; j < loops.size(); ++j) {
        aut[i][j] = static_cast<Elem>(std::find(loops.begin(), loops.end(), c.compose(loops[i], loops[j])) -
                                      loops.begin());
      }
    }
    const auto coords = abelian_coordinates(FinGroup::from_table(std::move(aut)));
    a = coords.group;
    coord = coords.of_element;
  }
  std::map<AbElem, Mor> loop_of;
  for (std::size_t i = 0; i < loops.size(); ++i) loop_of.emplace(coord[i], loops[i]);

  // Aut(x) ≅ A via θ ↦ θ ⊗ id_x.
  std::vector<std::map<Mor, AbElem>> transport(n);
  for (Obj x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < loops.size(); ++i) transport[x].emplace(t.tensor_morphisms(loops[i], c.identity(x)), coord[i]);
    require(transport[x].size() == loops.size() && transport[x].size() == c.hom(x, x).size(), "NotSkeletal",
            "automorphisms of " + c.object_label(x) + " are not a copy of the loops at the unit");
  }

  std::vector<AbHom> action;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<std::vector<std::int64_t>> matrix(a.rank(), std::vector<std::int64_t>(a.rank()));
    for (std::size_t j = 0; j < a.rank(); ++j) {
      AbElem basis = a.zero();
      basis[j] = 1;
      const Mor whiskered = t.tensor_morphisms(t.tensor_morphisms(c.identity(x), loop_of.at(basis)),
                                               c.identity(g.inverse(x)));
      const AbElem image = transport[e].at(whiskered);
      for (std::size_t i = 0; i < a.rank(); ++i) matrix[i][j] = image[i];
    }
    action.push_back(AbHom::make(a, a, std::move(matrix)));
  }
  GModule mod = GModule::make(g, a, std::move(action));
  Cochain alpha = Cochain::zero(mod, 3);
  for (std::size_t i = 0; i < alpha.values.size(); ++i) {
    const auto args = cochain_arguments(g, 3, i);
    const Mor component = t.associator(args[0], args[1], args[2]);
    alpha.values[i] = transport[c.src(component)].at(component);
  }
  return SkeletalTwoGroup{std::move(mod), std::move(alpha)};
}

bool eckmann_hilton_holds(const FinMonoidalGroupoid& t) {
  const FinCategory& c = t.category();
  const auto loops = c.hom(t.unit(), t.unit());
  for (Mor f : loops) {
    for (Mor g : loops) {
      if (c.compose(f, g) != c.compose(g, f) || t.tensor_morphisms(f, g) != c.compose(f, g)) return false;
    }
  }
  return true;
}

FinGroup decategorify(const FinMonoidalGroupoid& t) {
  const auto reps = isomorphism_class_representatives(t.category());
  std::vector<Obj> classes;
  std::map<Obj, Elem> class_index;
  for (Obj x = 0; x < reps.size(); ++x) {
    if (reps[x] == x) {
      class_index[x] = classes.size();
      classes.push_back(x);
    }
  }
  std::vector<std::vector<Elem>> table(classes.size(), std::vector<Elem>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      table[i][j] = class_index.at(reps[t.tensor(classes[i], classes[j])]);
    }
  }
  return FinGroup::from_table(std::move(table));
}

std::vector<AbHom> abelian_isomorphisms(const FinAbGroup& a, const FinAbGroup& b, std::size_t candidate_limit) {
  std::vector<AbHom> out;
  if (!isomorphic(a, b)) return out;
  const auto targets = b.elements();
  std::vector<std::vector<std::int64_t>> columns(a.rank());
  std::size_t nodes = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t j) {
    if (j == a.rank()) {
      std::vector<std::vector<std::int64_t>> matrix(b.rank(), std::vector<std::int64_t>(a.rank()));
      for (std::size_t i = 0; i < b.rank(); ++i) {
        for (std::size_t k = 0; k < a.rank(); ++k) matrix[i][k] = columns[k][i];
      }
      AbHom h = AbHom::make(a, b, std::move(matrix));
      if (kernel(h).group.rank() == 0) out.push_back(std::move(h));
      return;
    }
    for (const auto& y : targets) {
      if (a.modulus(j) % b.element_order(y) != 0) continue;
      if (++nodes > candidate_limit) {
        throw Error("BudgetExceeded", "isomorphism search exceeded " + std::to_string(candidate_limit) + " candidates");
      }
      columns[j] = y;
      assign(j + 1);
    }
  };
  assign(0);
  return out;
}

bool equivalent_two_groups(const SkeletalTwoGroup& s, const SkeletalTwoGroup& t, IsoScope scope,
                           std::size_t candidate_limit) {
  if (scope == IsoScope::FixedIdentifications) {
    if (!(s.pi1() == t.pi1()) || !(s.pi2() == t.pi2()) || s.module.action != t.module.action) return false;
    return cohomologous(s.alpha, t.alpha, s.module);
  }
  if (s.pi1().order() != t.pi1().order() || !isomorphic(s.pi2(), t.pi2())) return false;
  const auto psis = abelian_isomorphisms(s.pi2(), t.pi2(), candidate_limit);
  const FinGroup& g1 = s.pi1();
  bool found = false;
  for_each_isomorphism(
      g1, t.pi1(),
      [&](const std::vector<Elem>& phi) {
        for (const auto& psi : psis) {
          bool intertwines = true;
          for (Elem x = 0; x < g1.order() && intertwines; ++x) {
            intertwines = compose(psi, s.module.action[x]) == compose(t.module.action[phi[x]], psi);
          }
          if (!intertwines) continue;
          Cochain moved = Cochain::zero(t.module, 3);
          for (std::size_t i = 0; i < s.alpha.values.size(); ++i) {
            const auto args = cochain_arguments(g1, 3, i);
            const std::array<Elem, 3> image{phi[args[0]], phi[args[1]], phi[args[2]]};
            moved.set_value(t.module, image, psi.apply(s.alpha.values[i]));
          }
          if (cohomologous(moved, t.alpha, t.module)) {
            found = true;
            return false;
          }
        }
        return true;
      },
      candidate_limit);
  return found;
}

std::vector<SkeletalTwoGroup> classify(const GModule& m, const CohomologyLimits& limits) {
  const auto h3 = cohomology(m, 3, true, limits);
  std::vector<SkeletalTwoGroup> out;
  for (const auto& h : h3.group.elements()) out.push_back({m, h3.representative(h)});
  return out;
}

}  // namespace layercake
