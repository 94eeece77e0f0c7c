#include "layercake/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace layercake {

SetValuedFunctor SetValuedFunctor::make(CategoryPtr base, std::vector<std::vector<std::string>> sets,
                                        std::vector<std::vector<std::size_t>> maps) {
  const FinCategory& b = *base;
  if (sets.size() != b.num_objects() || maps.size() != b.num_morphisms()) {
    throw Error("FunctorViolation", "need one set per object and one map per morphism");
  }
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    if (maps[f].size() != sets[b.src(f)].size()) {
      throw Error("FunctorViolation", "map for " + b.morphism_label(f) + " has the wrong domain size");
    }
    for (std::size_t y : maps[f]) {
      if (y >= sets[b.tgt(f)].size()) {
        throw Error("FunctorViolation", "map for " + b.morphism_label(f) + " leaves its codomain");
      }
    }
  }
  for (Obj x = 0; x < b.num_objects(); ++x) {
    const auto& id = maps[b.identity(x)];
    for (std::size_t i = 0; i < id.size(); ++i) {
      if (id[i] != i) throw Error("FunctorViolation", "identity of " + b.object_label(x) + " is not sent to an identity");
    }
  }
  for (Mor g = 0; g < b.num_morphisms(); ++g) {
    for (Mor f = 0; f < b.num_morphisms(); ++f) {
      if (!b.composable(g, f)) continue;
      const auto& gf = maps[b.compose(g, f)];
      for (std::size_t i = 0; i < gf.size(); ++i) {
        if (gf[i] != maps[g][maps[f][i]]) {
          throw Error("FunctorViolation", "composite " + b.morphism_label(g) + " ∘ " + b.morphism_label(f) +
                                              " is not preserved");
        }
      }
    }
  }
  return SetValuedFunctor{std::move(base), std::move(sets), std::move(maps)};
}

SetValuedFunctor SetValuedFunctor::point(CategoryPtr base) {
  std::vector<std::vector<std::string>> sets(base->num_objects(), {"*"});
  std::vector<std::vector<std::size_t>> maps(base->num_morphisms(), {0});
  return make(std::move(base), std::move(sets), std::move(maps));
}

GrothendieckConstruction grothendieck_construct(const SetValuedFunctor& fn) {
  const FinCategory& b = *fn.base;
  std::vector<std::pair<Obj, std::size_t>> elements;
  std::vector<std::vector<Obj>> object_of(b.num_objects());
  std::vector<std::string> labels;
  for (Obj x = 0; x < b.num_objects(); ++x) {
    for (std::size_t i = 0; i < fn.sets[x].size(); ++i) {
      object_of[x].push_back(elements.size());
      elements.emplace_back(x, i);
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(i) + ")");
    }
  }
  // Morphisms (f, i) ordered by f, then i.
  std::vector<MorphismSpec> morphisms;
  std::vector<std::vector<Mor>> morphism_of(b.num_morphisms());
  std::vector<Obj> over_objects;
  std::vector<Mor> over_morphisms;
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    for (std::size_t i = 0; i < fn.sets[b.src(f)].size(); ++i) {
      morphism_of[f].push_back(morphisms.size());
      morphisms.push_back({"(" + std::to_string(f) + "," + std::to_string(i) + ")", object_of[b.src(f)][i],
                           object_of[b.tgt(f)][fn.maps[f][i]]});
      over_morphisms.push_back(f);
    }
  }
  std::vector<Mor> identities;
  for (const auto& [x, i] : elements) {
    identities.push_back(morphism_of[b.identity(x)][i]);
    over_objects.push_back(x);
  }
  const std::vector<MorphismSpec> specs = morphisms;
  auto total = share(FinCategory::from_rule(std::move(labels), std::move(morphisms), std::move(identities),
                                            [&](Mor g, Mor f) {
                                              const Mor h = b.compose(over_morphisms[g], over_morphisms[f]);
                                              return morphism_of[h][elements[specs[f].src].second];
                                            }));
  auto projection = FinFunctor::make(total, fn.base, std::move(over_objects), std::move(over_morphisms));
  return {total, std::move(projection), std::move(elements)};
}

OpfibrationVerdict check_discrete_opfibration(const FinFunctor& p) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    for (Obj s = 0; s < e.num_objects(); ++s) {
      if (p.on_object(s) != b.src(f)) continue;
      std::size_t lifts = 0;
      for (Obj t = 0; t < e.num_objects(); ++t) {
        for (Mor g : e.hom(s, t)) lifts += p.on_morphism(g) == f;
      }
      if (lifts != 1) return {false, LiftCounterexample{f, s, lifts}};
    }
  }
  return {true, std::nullopt};
}

SetValuedFunctor reconstruct(const FinFunctor& p) {
  const auto verdict = check_discrete_opfibration(p);
  if (!verdict.holds) {
    const auto& c = *verdict.counterexample;
    throw Error("NotAFibration", p.codomain().morphism_label(c.morphism) + " has " + std::to_string(c.lifts) +
                                     " lifts from " + p.domain().object_label(c.source));
  }
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  std::vector<std::vector<std::string>> sets(b.num_objects());
  std::vector<std::size_t> position(e.num_objects());
  for (Obj o = 0; o < e.num_objects(); ++o) {
    auto& fiber = sets[p.on_object(o)];
    position[o] = fiber.size();
    fiber.push_back(e.object_label(o));
  }
  std::vector<std::vector<std::size_t>> maps(b.num_morphisms());
  for (Mor f = 0; f < b.num_morphisms(); ++f) maps[f].resize(sets[b.src(f)].size());
  for (Mor g = 0; g < e.num_morphisms(); ++g) {
    maps[p.on_morphism(g)][position[e.src(g)]] = position[e.tgt(g)];
  }
  return SetValuedFunctor::make(p.codomain_ptr(), std::move(sets), std::move(maps));
}

std::optional<std::vector<std::vector<std::size_t>>> set_functor_isomorphism(const SetValuedFunctor& f,
                                                                           const SetValuedFunctor& g) {
  if (!same_category(f.base, g.base)) return std::nullopt;
  const FinCategory& b = *f.base;
  const std::size_t n = b.num_objects();
  for (Obj x = 0; x < n; ++x) {
    if (f.sets[x].size() != g.sets[x].size()) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> sigma(n);
  for (Obj x = 0; x < n; ++x) {
    sigma[x].resize(f.sets[x].size());
    std::iota(sigma[x].begin(), sigma[x].end(), 0);
  }
  // Naturality squares whose corners are both among the first k objects.
  auto consistent = [&](Obj k) {
    for (Mor m = 0; m < b.num_morphisms(); ++m) {
      const Obj s = b.src(m);
      const Obj t = b.tgt(m);
      if (std::max(s, t) != k) continue;
      for (std::size_t i = 0; i < f.sets[s].size(); ++i) {
        if (sigma[t][f.maps[m][i]] != g.maps[m][sigma[s][i]]) return false;
      }
    }
    return true;
  };
  std::function<bool(Obj)> assign = [&](Obj k) {
    if (k == n) return true;
    std::sort(sigma[k].begin(), sigma[k].end());
    do {
      if (consistent(k) && assign(k + 1)) return true;
    } while (std::next_permutation(sigma[k].begin(), sigma[k].end()));
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return sigma;
}

std::optional<FinFunctor> isomorphism_over_base(const FinFunctor& p, const FinFunctor& q,
                                                const SearchLimits& limits) {
  if (!same_category(p.codomain_ptr(), q.codomain_ptr())) return std::nullopt;
  if (p.domain().num_objects() != q.domain().num_objects() ||
      p.domain().num_morphisms() != q.domain().num_morphisms()) {
    return std::nullopt;
  }
  std::optional<FinFunctor> found;
  FunctorSearchOptions options;
  options.limits = limits;
  options.fully_faithful = true;
  for_each_functor(
      p.domain_ptr(), q.domain_ptr(),
      [&](const FinFunctor& h) {
        std::vector<bool> hit(q.domain().num_objects(), false);
        for (Obj x : h.object_map()) {
          if (hit[x]) return true;
          hit[x] = true;
        }
        if (!(compose(q, h) == p)) return true;
        found = h;
        return false;
      },
      options);
  return found;
}

bool is_cartesian(const FinFunctor& p, Mor phi) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  const Obj lift_src = e.src(phi);
  const Obj lift_tgt = e.tgt(phi);
  const Mor f = p.on_morphism(phi);
  for (Obj other = 0; other < e.num_objects(); ++other) {
    for (Mor psi : e.hom(other, lift_tgt)) {
      for (Mor g : b.hom(p.on_object(other), p.on_object(lift_src))) {
        if (b.compose(f, g) != p.on_morphism(psi)) continue;
        std::size_t factorizations = 0;
        for (Mor chi : e.hom(other, lift_src)) {
          factorizations += p.on_morphism(chi) == g && e.compose(phi, chi) == psi;
        }
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

FibrationVerdict check_grothendieck_fibration(const FinFunctor& p) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    for (Obj target = 0; target < e.num_objects(); ++target) {
      if (p.on_object(target) != b.tgt(f)) continue;
      bool lifted = false;
      for (Obj source = 0; source < e.num_objects() && !lifted; ++source) {
        if (p.on_object(source) != b.src(f)) continue;
        for (Mor phi : e.hom(source, target)) {
          if (p.on_morphism(phi) == f && is_cartesian(p, phi)) {
            lifted = true;
            break;
          }
        }
      }
      if (!lifted) return {false, CartesianCounterexample{f, target}};
    }
  }
  return {true, std::nullopt};
}

FinFunctor opposite_functor(const FinFunctor& p) {
  return opposite(p, share(opposite(p.domain())), share(opposite(p.codomain())));
}

}  // namespace layercake
