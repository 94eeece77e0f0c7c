#include "layercake/surjectivity.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace layercake {

SurjectivityProfile surjectivity_profile(const FinFunctor& p) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  SurjectivityProfile profile{true, true, true};
  for (Obj y = 0; y < b.num_objects() && profile.surj0; ++y) {
    bool hit = false;
    for (Obj x = 0; x < e.num_objects() && !hit; ++x) hit = isomorphic_objects(b, p.on_object(x), y);
    profile.surj0 = hit;
  }
  for (Obj x = 0; x < e.num_objects(); ++x) {
    for (Obj y = 0; y < e.num_objects(); ++y) {
      std::vector<Mor> images;
      for (Mor f : e.hom(x, y)) images.push_back(p.on_morphism(f));
      std::sort(images.begin(), images.end());
      const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      images.erase(std::unique(images.begin(), images.end()), images.end());
      profile.surj2 = profile.surj2 && injective;
      profile.surj1 = profile.surj1 && images.size() == b.hom(p.on_object(x), p.on_object(y)).size();
    }
  }
  return profile;
}

ForgetfulnessVerdict classify_forgetfulness(const SurjectivityProfile& s) {
  ForgetfulnessVerdict v;
  if (s.surj0 && s.surj1 && s.surj2) {
    v.tag = Forgets::Nothing;
  } else if (s.surj1 && s.surj2) {
    v.tag = Forgets::AtMostProperties;
  } else if (s.surj2) {
    v.tag = Forgets::AtMostStructure;
  } else {
    v.tag = Forgets::AtMostStuff;
  }
  v.purely_stuff = s.surj0 && s.surj1;
  v.purely_structure = s.surj0 && s.surj2;
  v.purely_properties = s.surj1 && s.surj2;
  return v;
}

ForgetfulnessVerdict classify_forgetfulness(const FinFunctor& p) {
  return classify_forgetfulness(surjectivity_profile(p));
}

int forgetfulness_level(Forgets tag) {
  switch (tag) {
    case Forgets::Nothing: return -2;
    case Forgets::AtMostProperties: return -1;
    case Forgets::AtMostStructure: return 0;
    case Forgets::AtMostStuff: return 1;
  }
  return 1;
}

std::string to_string(Forgets f) {
  switch (f) {
    case Forgets::Nothing: return "Nothing";
    case Forgets::AtMostProperties: return "AtMostProperties";
    case Forgets::AtMostStructure: return "AtMostStructure";
    case Forgets::AtMostStuff: return "AtMostStuff";
  }
  return "AtMostStuff";
}

FactorizationTower factorize(const FinFunctor& p) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();

  // E′: a morphism e → e′ is a morphism p(e) → p(e′) hit by some f : e → e′.
  std::map<std::tuple<Obj, Obj, Mor>, Mor> index;
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> over;  // underlying B-morphism
  std::vector<Mor> p2_morphisms(e.num_morphisms());
  for (Mor f = 0; f < e.num_morphisms(); ++f) {
    const auto key = std::make_tuple(e.src(f), e.tgt(f), p.on_morphism(f));
    auto [it, inserted] = index.try_emplace(key, morphisms.size());
    if (inserted) {
      morphisms.push_back({b.morphism_label(p.on_morphism(f)) + "@" + e.object_label(e.src(f)) + "," +
                               e.object_label(e.tgt(f)),
                           e.src(f), e.tgt(f)});
      over.push_back(p.on_morphism(f));
    }
    p2_morphisms[f] = it->second;
  }
  std::vector<std::string> objects;
  std::vector<Mor> identities;
  for (Obj x = 0; x < e.num_objects(); ++x) {
    objects.push_back(e.object_label(x));
    identities.push_back(p2_morphisms[e.identity(x)]);
  }
  const std::vector<MorphismSpec> specs = morphisms;
  auto e_prime = share(FinCategory::from_rule(std::move(objects), std::move(morphisms), identities,
                                              [&](Mor g, Mor f) {
                                                const auto key = std::make_tuple(
                                                    specs[f].src, specs[g].tgt, b.compose_or_none(over[g], over[f]));
                                                auto it = index.find(key);
                                                return it == index.end() ? kNone : it->second;
                                              }));

  std::vector<Obj> image;
  for (Obj y = 0; y < b.num_objects(); ++y) {
    for (Obj x = 0; x < e.num_objects(); ++x) {
      if (isomorphic_objects(b, p.on_object(x), y)) {
        image.push_back(y);
        break;
      }
    }
  }
  auto [e_double_prime, p0] = full_subcategory(p.codomain_ptr(), image);

  std::vector<Obj> position(b.num_objects(), kNone);
  for (std::size_t i = 0; i < image.size(); ++i) position[image[i]] = i;
  std::vector<Mor> sub_index(b.num_morphisms(), kNone);
  for (Mor f = 0; f < e_double_prime->num_morphisms(); ++f) sub_index[p0.on_morphism(f)] = f;

  std::vector<Obj> p1_objects(e.num_objects());
  for (Obj x = 0; x < e.num_objects(); ++x) p1_objects[x] = position[p.on_object(x)];
  std::vector<Mor> p1_morphisms(e_prime->num_morphisms());
  for (Mor f = 0; f < e_prime->num_morphisms(); ++f) p1_morphisms[f] = sub_index[over[f]];

  std::vector<Obj> p2_objects(e.num_objects());
  for (Obj x = 0; x < e.num_objects(); ++x) p2_objects[x] = x;

  auto p2 = FinFunctor::make(p.domain_ptr(), e_prime, std::move(p2_objects), std::move(p2_morphisms));
  auto p1 = FinFunctor::make(e_prime, e_double_prime, std::move(p1_objects), std::move(p1_morphisms));
  auto composite = compose(p0, compose(p1, p2));
  std::vector<Mor> ids(e.num_objects());
  for (Obj x = 0; x < e.num_objects(); ++x) ids[x] = b.identity(p.on_object(x));
  auto iso = NatTransformation::make(composite, p, std::move(ids));
  return {e_prime, e_double_prime, std::move(p2), std::move(p1), std::move(p0), std::move(iso)};
}
EssentialFiber essential_fiber(const FinFunctor& p, Obj x, FiberKind kind) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  if (x >= b.num_objects()) throw Error("UnknownObject", "object index " + std::to_string(x) + " out of range");

  std::vector<FiberObject> objects;
  for (Obj o = 0; o < e.num_objects(); ++o) {
    if (kind == FiberKind::Strict) {
      if (p.on_object(o) == x) objects.push_back({o, b.identity(x)});
      continue;
    }
    for (Mor phi : b.hom(p.on_object(o), x)) {
      if (is_isomorphism(b, phi)) objects.push_back({o, phi});
    }
  }

  // A morphism (o, φ) → (o′, φ′) is f : o → o′ with φ′ ∘ p(f) = φ.
  std::vector<std::string> labels;
  for (const auto& fo : objects) labels.push_back(e.object_label(fo.object) + "|" + b.morphism_label(fo.witness));
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> underlying;
  std::map<std::tuple<Obj, Obj, Mor>, Mor> index;
  std::vector<Mor> identities(objects.size());
  for (Obj i = 0; i < objects.size(); ++i) {
    for (Obj j = 0; j < objects.size(); ++j) {
      for (Mor f : e.hom(objects[i].object, objects[j].object)) {
        if (b.compose(objects[j].witness, p.on_morphism(f)) != objects[i].witness) continue;
        if (i == j && f == e.identity(objects[i].object)) identities[i] = morphisms.size();
        index[{i, j, f}] = morphisms.size();
        morphisms.push_back({e.morphism_label(f) + "@" + labels[i] + "," + labels[j], i, j});
        underlying.push_back(f);
      }
    }
  }
  const std::vector<MorphismSpec> specs = morphisms;
  auto fiber = share(FinCategory::from_rule(std::move(labels), std::move(morphisms), std::move(identities),
                                            [&](Mor g, Mor f) {
                                              auto it = index.find({specs[f].src, specs[g].tgt,
                                                                    e.compose(underlying[g], underlying[f])});
                                              return it == index.end() ? kNone : it->second;
                                            }));
  std::vector<Obj> object_map;
  for (const auto& fo : objects) object_map.push_back(fo.object);
  auto projection = FinFunctor::make(fiber, p.domain_ptr(), std::move(object_map), std::move(underlying));
  return {fiber, std::move(objects), std::move(projection)};
}

CategoryDimension classify_dimension(const FinCategory& c) {
  if (c.empty()) return CategoryDimension::Minus1;
  const bool thin = is_thin(c);
  const bool groupoid = is_groupoid(c);
  if (thin && groupoid) {
    for (Obj x = 1; x < c.num_objects(); ++x) {
      if (!isomorphic_objects(c, 0, x)) return CategoryDimension::ZeroGroupoid;
    }
    return CategoryDimension::Minus2;
  }
  if (thin) return CategoryDimension::Poset01;
  if (groupoid) return CategoryDimension::OneGroupoid;
  return CategoryDimension::OneCategory;
}

int dimension_level(CategoryDimension d) {
  switch (d) {
    case CategoryDimension::Minus2: return -2;
    case CategoryDimension::Minus1: return -1;
    case CategoryDimension::ZeroGroupoid:
    case CategoryDimension::Poset01: return 0;
    case CategoryDimension::OneGroupoid:
    case CategoryDimension::OneCategory: return 1;
  }
  return 1;
}

std::string to_string(CategoryDimension d) {
  switch (d) {
    case CategoryDimension::Minus2: return "Minus2";
    case CategoryDimension::Minus1: return "Minus1";
    case CategoryDimension::ZeroGroupoid: return "ZeroGroupoid";
    case CategoryDimension::Poset01: return "Poset01";
    case CategoryDimension::OneGroupoid: return "OneGroupoid";
    case CategoryDimension::OneCategory: return "OneCategory";
  }
  return "OneCategory";
}

FiberDimensionReport fiber_dimension_report(const FinFunctor& p) {
  FiberDimensionReport report;
  report.verdict = classify_forgetfulness(p);
  report.groupoid_input = is_groupoid(p.domain()) && is_groupoid(p.codomain());
  int worst = -2;
  for (Obj x = 0; x < p.codomain().num_objects(); ++x) {
    const auto dim = classify_dimension(*essential_fiber(p, x).category);
    report.fibers.push_back(dim);
    worst = std::max(worst, dimension_level(dim));
  }
  const int level = forgetfulness_level(report.verdict.tag);
  report.forward_consistent = worst <= level;
  report.converse_consistent = level <= worst;
  return report;
}

bool is_j_monic(const FinFunctor& p, int j) {
  const auto s = surjectivity_profile(p);
  switch (j) {
    case -1: return s.surj0 && s.surj1 && s.surj2;
    case 0: return s.surj1 && s.surj2;
    case 1: return s.surj2;
    case 2: return true;
    default: throw Error("InvalidLevel", "j must lie in {-1, 0, 1, 2}, got " + std::to_string(j));
  }
}

LiftingSquare LiftingSquare::make(FinFunctor p, FinFunctor m, FinFunctor top, FinFunctor bottom,
                                  NatTransformation iso) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error("SquareMismatch", what);
  };
  require(same_category(top.domain_ptr(), p.domain_ptr()), "top and p must share their domain");
  require(same_category(top.codomain_ptr(), m.domain_ptr()), "top must land in the domain of m");
  require(same_category(bottom.domain_ptr(), p.codomain_ptr()), "bottom must start at the codomain of p");
  require(same_category(bottom.codomain_ptr(), m.codomain_ptr()), "bottom and m must share their codomain");
  require(iso.source() == compose(m, top), "iso must start at m∘top");
  require(iso.target() == compose(bottom, p), "iso must end at bottom∘p");
  require(iso.is_isomorphism(), "iso must be invertible");
  return LiftingSquare{std::move(p), std::move(m), std::move(top), std::move(bottom), std::move(iso)};
}

FillerReport has_diagonal_filler(const LiftingSquare& sq, std::size_t candidate_limit) {
  const FinCategory& e = sq.p.domain();
  const FinCategory& x_cat = sq.m.domain();
  const FinCategory& y_cat = sq.m.codomain();
  FillerReport report;
  std::vector<DiagonalFiller> fillers;

  auto remaining = [&]() {
    if (report.candidates_explored > candidate_limit) {
      throw Error("BudgetExceeded", "filler search exceeded " + std::to_string(candidate_limit) + " candidates");
    }
    return candidate_limit - report.candidates_explored;
  };

  FunctorSearchOptions options;
  options.limits.candidate_limit = candidate_limit;
  report.candidates_explored += for_each_functor(
      sq.p.codomain_ptr(), sq.m.domain_ptr(),
      [&](const FinFunctor& h) {
        const FinFunctor mh = compose(sq.m, h);
        const FinFunctor hp = compose(h, sq.p);
        report.candidates_explored += for_each_natural_isomorphism(
            mh, sq.bottom,
            [&](const NatTransformation& beta) {
              report.candidates_explored += for_each_natural_isomorphism(
                  hp, sq.top,
                  [&](const NatTransformation& alpha) {
                    for (Obj o = 0; o < e.num_objects(); ++o) {
                      const Mor lhs = y_cat.compose(sq.iso.component(o), sq.m.on_morphism(alpha.component(o)));
                      if (lhs != beta.component(sq.p.on_object(o))) return true;
                    }
                    fillers.push_back({h, alpha, beta});
                    return true;
                  },
                  remaining());
              return true;
            },
            remaining());
        remaining();
        return true;
      },
      options);
  remaining();

  report.filler_count = fillers.size();
  if (fillers.empty()) return report;
  report.filler = fillers.front();

  // Fillers i, j are related by θ : h_i ≅ h_j with α_j ∘ θp = α_i and β_j ∘ mθ = β_i.
  bool unique = true;
  for (std::size_t i = 0; i < fillers.size() && unique; ++i) {
    for (std::size_t j = 0; j < fillers.size() && unique; ++j) {
      const auto& a = fillers[i];
      const auto& b = fillers[j];
      std::size_t compatible = 0;
      report.candidates_explored += for_each_natural_isomorphism(
          a.h, b.h,
          [&](const NatTransformation& theta) {
            for (Obj o = 0; o < e.num_objects(); ++o) {
              const Mor via = x_cat.compose(b.upper.component(o), theta.component(sq.p.on_object(o)));
              if (via != a.upper.component(o)) return true;
            }
            for (Obj o = 0; o < sq.p.codomain().num_objects(); ++o) {
              const Mor via = y_cat.compose(b.lower.component(o), sq.m.on_morphism(theta.component(o)));
              if (via != a.lower.component(o)) return true;
            }
            ++compatible;
            return compatible < 2;
          },
          remaining());
      unique = compatible == 1;
    }
  }
  report.essentially_unique = unique;
  return report;
}

}  // namespace layercake
