#include "layercake/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace layercake {

namespace {

std::string triple_label(const FinCategory& c, Mor h, Mor g, Mor f) {
  return "(" + c.morphism_label(h) + ", " + c.morphism_label(g) + ", " + c.morphism_label(f) + ")";
}

void check_morphism_endpoints(std::size_t n, const std::vector<MorphismSpec>& morphisms) {
  for (std::size_t f = 0; f < morphisms.size(); ++f) {
    if (morphisms[f].src >= n || morphisms[f].tgt >= n) {
      throw Error("MalformedCategory", "morphism " + morphisms[f].label + " has an unknown endpoint");
    }
  }
}

}  // namespace

FinCategory FinCategory::from_rule(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                                   std::vector<Mor> identities,
                                   const std::function<Mor(Mor, Mor)>& compose) {
  const std::size_t n = objects.size();
  const std::size_t m = morphisms.size();
  if (identities.size() != n) {
    throw Error("MalformedCategory", "expected one identity per object");
  }
  check_morphism_endpoints(n, morphisms);
  for (Obj x = 0; x < n; ++x) {
    const Mor id = identities[x];
    if (id >= m) throw Error("MalformedCategory", "identity of " + objects[x] + " is not a morphism");
    if (morphisms[id].src != x || morphisms[id].tgt != x) {
      throw Error("IdentityViolation", "identity of " + objects[x] + " is not an endomorphism of it");
    }
  }

  FinCategory c;
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);
  c.identities_ = std::move(identities);
  c.homs_.assign(n * n, {});
  for (Mor f = 0; f < m; ++f) c.homs_[c.src(f) * n + c.tgt(f)].push_back(f);

  c.table_.assign(m * m, kNone);
  for (Mor g = 0; g < m; ++g) {
    for (Mor f = 0; f < m; ++f) {
      if (!c.composable(g, f)) continue;
      const Mor h = compose(g, f);
      if (h == kNone) {
        throw Error("MissingComposite",
                    "no entry for " + c.morphism_label(g) + " ∘ " + c.morphism_label(f));
      }
      if (h >= m) throw Error("MalformedCategory", "composite is not a morphism");
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        throw Error("CompositeMismatch", c.morphism_label(g) + " ∘ " + c.morphism_label(f) + " = " +
                                             c.morphism_label(h) + " has the wrong endpoints");
      }
      c.table_[g * m + f] = h;
    }
  }

  for (Mor f = 0; f < m; ++f) {
    if (c.compose_or_none(c.identity(c.tgt(f)), f) != f || c.compose_or_none(f, c.identity(c.src(f))) != f) {
      throw Error("IdentityViolation", "unit law fails for " + c.morphism_label(f));
    }
  }

  std::vector<std::vector<Mor>> outgoing(n);
  for (Mor f = 0; f < m; ++f) outgoing[c.src(f)].push_back(f);
  for (Mor f = 0; f < m; ++f) {
    for (Mor g : outgoing[c.tgt(f)]) {
      const Mor gf = c.compose_or_none(g, f);
      for (Mor h : outgoing[c.tgt(g)]) {
        if (c.compose_or_none(c.compose_or_none(h, g), f) != c.compose_or_none(h, gf)) {
          throw Error("AssociativityViolation", "(h∘g)∘f != h∘(g∘f) for (h, g, f) = " + triple_label(c, h, g, f));
        }
      }
    }
  }
  return c;
}

FinCategory FinCategory::validate(const CategoryPresentation& raw) {
  const std::size_t m = raw.morphisms.size();
  check_morphism_endpoints(raw.objects.size(), raw.morphisms);
  std::vector<Mor> pending(m * m, kNone);
  for (const auto& [g, f, h] : raw.composition) {
    if (g >= m || f >= m || h >= m) throw Error("MalformedCategory", "composition entry names an unknown morphism");
    if (raw.morphisms[f].tgt != raw.morphisms[g].src) {
      throw Error("CompositeMismatch", "entry for non-composable pair (" + raw.morphisms[g].label + ", " +
                                           raw.morphisms[f].label + ")");
    }
    Mor& slot = pending[g * m + f];
    if (slot != kNone && slot != h) {
      throw Error("ConflictingComposite",
                  "two composites given for (" + raw.morphisms[g].label + ", " + raw.morphisms[f].label + ")");
    }
    slot = h;
  }
  return from_rule(raw.objects, raw.morphisms, raw.identities, [&](Mor g, Mor f) { return pending[g * m + f]; });
}

std::optional<Obj> FinCategory::find_object(std::string_view label) const {
  auto it = std::find(objects_.begin(), objects_.end(), label);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<Obj>(it - objects_.begin());
}

std::optional<Mor> FinCategory::find_morphism(std::string_view label) const {
  for (Mor f = 0; f < morphisms_.size(); ++f) {
    if (morphisms_[f].label == label) return f;
  }
  return std::nullopt;
}

Mor FinCategory::compose(Mor g, Mor f) const {
  if (f >= num_morphisms() || g >= num_morphisms()) throw Error("UnknownMorphism", "index out of range");
  if (!composable(g, f)) {
    throw Error("NotComposable", morphism_label(g) + " ∘ " + morphism_label(f));
  }
  return table_[g * morphisms_.size() + f];
}

CategoryPresentation FinCategory::presentation() const {
  CategoryPresentation p{objects_, morphisms_, identities_, {}};
  const std::size_t m = morphisms_.size();
  for (Mor g = 0; g < m; ++g) {
    for (Mor f = 0; f < m; ++f) {
      if (composable(g, f)) p.composition.push_back({g, f, table_[g * m + f]});
    }
  }
  return p;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::vector<Mor> hom_set(const FinCategory& c, Obj x, Obj y) {
  if (x >= c.num_objects() || y >= c.num_objects()) throw Error("UnknownObject", "object index out of range");
  auto h = c.hom(x, y);
  return {h.begin(), h.end()};
}

std::optional<Mor> inverse_of(const FinCategory& c, Mor f) {
  const Obj x = c.src(f);
  const Obj y = c.tgt(f);
  for (Mor g : c.hom(y, x)) {
    if (c.compose_or_none(g, f) == c.identity(x) && c.compose_or_none(f, g) == c.identity(y)) return g;
  }
  return std::nullopt;
}

bool is_isomorphism(const FinCategory& c, Mor f) { return inverse_of(c, f).has_value(); }

std::optional<Mor> find_isomorphism(const FinCategory& c, Obj x, Obj y) {
  for (Mor f : c.hom(x, y)) {
    if (is_isomorphism(c, f)) return f;
  }
  return std::nullopt;
}

bool isomorphic_objects(const FinCategory& c, Obj x, Obj y) { return find_isomorphism(c, x, y).has_value(); }

std::vector<Obj> isomorphism_class_representatives(const FinCategory& c) {
  std::vector<Obj> rep(c.num_objects());
  for (Obj x = 0; x < c.num_objects(); ++x) {
    rep[x] = x;
    for (Obj r = 0; r < x; ++r) {
      if (rep[r] == r && isomorphic_objects(c, r, x)) {
        rep[x] = r;
        break;
      }
    }
  }
  return rep;
}

bool is_groupoid(const FinCategory& c) {
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    if (!is_isomorphism(c, f)) return false;
  }
  return true;
}

bool is_thin(const FinCategory& c) {
  for (Obj x = 0; x < c.num_objects(); ++x) {
    for (Obj y = 0; y < c.num_objects(); ++y) {
      if (c.hom(x, y).size() > 1) return false;
    }
  }
  return true;
}

FinCategory opposite(const FinCategory& c) {
  auto p = c.presentation();
  for (auto& spec : p.morphisms) std::swap(spec.src, spec.tgt);
  return FinCategory::from_rule(p.objects, p.morphisms, p.identities,
                                [&](Mor g, Mor f) { return c.compose_or_none(f, g); });
}

// ---------------------------------------------------------------------------
// Functors

FinFunctor FinFunctor::make(CategoryPtr domain, CategoryPtr codomain, std::vector<Obj> objects,
                            std::vector<Mor> morphisms) {
  if (!domain || !codomain) throw Error("FunctorViolation", "missing domain or codomain");
  const FinCategory& d = *domain;
  const FinCategory& c = *codomain;
  if (objects.size() != d.num_objects() || morphisms.size() != d.num_morphisms()) {
    throw Error("FunctorViolation", "object or morphism map has the wrong size");
  }
  for (Obj x = 0; x < d.num_objects(); ++x) {
    if (objects[x] >= c.num_objects()) throw Error("FunctorViolation", "object image out of range");
  }
  for (Mor f = 0; f < d.num_morphisms(); ++f) {
    const Mor image = morphisms[f];
    if (image >= c.num_morphisms()) throw Error("FunctorViolation", "morphism image out of range");
    if (c.src(image) != objects[d.src(f)] || c.tgt(image) != objects[d.tgt(f)]) {
      throw Error("FunctorViolation", "image of " + d.morphism_label(f) + " has the wrong endpoints");
    }
  }
  for (Obj x = 0; x < d.num_objects(); ++x) {
    if (morphisms[d.identity(x)] != c.identity(objects[x])) {
      throw Error("FunctorViolation", "identity of " + d.object_label(x) + " is not preserved");
    }
  }
  for (Mor g = 0; g < d.num_morphisms(); ++g) {
    for (Mor f = 0; f < d.num_morphisms(); ++f) {
      const Mor gf = d.compose_or_none(g, f);
      if (gf == kNone) continue;
      if (morphisms[gf] != c.compose_or_none(morphisms[g], morphisms[f])) {
        throw Error("FunctorViolation",
                    "composite " + d.morphism_label(g) + " ∘ " + d.morphism_label(f) + " is not preserved");
      }
    }
  }
  return FinFunctor(std::move(domain), std::move(codomain), std::move(objects), std::move(morphisms));
}

FinFunctor FinFunctor::identity(CategoryPtr c) {
  std::vector<Obj> objects(c->num_objects());
  std::vector<Mor> morphisms(c->num_morphisms());
  for (Obj x = 0; x < objects.size(); ++x) objects[x] = x;
  for (Mor f = 0; f < morphisms.size(); ++f) morphisms[f] = f;
  return FinFunctor(c, c, std::move(objects), std::move(morphisms));
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return same_category(domain_, other.domain_) && same_category(codomain_, other.codomain_) &&
         objects_ == other.objects_ && morphisms_ == other.morphisms_;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.codomain_ptr(), g.domain_ptr())) {
    throw Error("NotComposable", "codomain of the first functor is not the domain of the second");
  }
  std::vector<Obj> objects(f.domain().num_objects());
  std::vector<Mor> morphisms(f.domain().num_morphisms());
  for (Obj x = 0; x < objects.size(); ++x) objects[x] = g.on_object(f.on_object(x));
  for (Mor m = 0; m < morphisms.size(); ++m) morphisms[m] = g.on_morphism(f.on_morphism(m));
  return FinFunctor::trusted(f.domain_ptr(), g.codomain_ptr(), std::move(objects), std::move(morphisms));
}

FinFunctor opposite(const FinFunctor& f, CategoryPtr domain_op, CategoryPtr codomain_op) {
  return FinFunctor::make(std::move(domain_op), std::move(codomain_op),
                          {f.object_map().begin(), f.object_map().end()},
                          {f.morphism_map().begin(), f.morphism_map().end()});
}

// ---------------------------------------------------------------------------
// Natural transformations

NatTransformation NatTransformation::make(FinFunctor source, FinFunctor target, std::vector<Mor> components) {
  if (!same_category(source.domain_ptr(), target.domain_ptr()) ||
      !same_category(source.codomain_ptr(), target.codomain_ptr())) {
    throw Error("NaturalityViolation", "functors are not parallel");
  }
  const FinCategory& d = source.domain();
  const FinCategory& c = source.codomain();
  if (components.size() != d.num_objects()) throw Error("NaturalityViolation", "wrong number of components");
  for (Obj x = 0; x < d.num_objects(); ++x) {
    const Mor eta = components[x];
    if (eta >= c.num_morphisms() || c.src(eta) != source.on_object(x) || c.tgt(eta) != target.on_object(x)) {
      throw Error("NaturalityViolation", "component at " + d.object_label(x) + " has the wrong endpoints");
    }
  }
  for (Mor f = 0; f < d.num_morphisms(); ++f) {
    const Mor lhs = c.compose_or_none(target.on_morphism(f), components[d.src(f)]);
    const Mor rhs = c.compose_or_none(components[d.tgt(f)], source.on_morphism(f));
    if (lhs != rhs) {
      throw Error("NaturalityViolation", "square at " + d.morphism_label(f) + " does not commute");
    }
  }
  return NatTransformation(std::move(source), std::move(target), std::move(components));
}

NatTransformation NatTransformation::identity(const FinFunctor& f) {
  std::vector<Mor> components(f.domain().num_objects());
  for (Obj x = 0; x < components.size(); ++x) components[x] = f.codomain().identity(f.on_object(x));
  return NatTransformation(f, f, std::move(components));
}

bool NatTransformation::is_isomorphism() const {
  return std::all_of(components_.begin(), components_.end(),
                     [&](Mor eta) { return layercake::is_isomorphism(source_.codomain(), eta); });
}

std::optional<FinGroupoid> FinGroupoid::from(CategoryPtr c) {
  std::vector<Mor> inverse(c->num_morphisms());
  for (Mor f = 0; f < inverse.size(); ++f) {
    auto g = inverse_of(*c, f);
    if (!g) return std::nullopt;
    inverse[f] = *g;
  }
  return FinGroupoid{std::move(c), std::move(inverse)};
}

// ---------------------------------------------------------------------------
// Searches

namespace {

void over_budget(std::size_t limit) {
  throw Error("BudgetExceeded", "search exceeded " + std::to_string(limit) + " candidates");
}

class FunctorSearch {
 public:
  FunctorSearch(const CategoryPtr& dom, const CategoryPtr& cod, const FunctorSearchOptions& options,
                std::function<bool(const std::vector<Obj>&)> object_filter,
                std::function<bool(const FinFunctor&)> visit)
      : dom_ptr_(dom), cod_ptr_(cod), dom_(*dom), cod_(*cod), options_(options),
        object_filter_(std::move(object_filter)), visit_(std::move(visit)),
        objects_(dom_.num_objects(), kNone), morphisms_(dom_.num_morphisms(), kNone),
        checks_(dom_.num_morphisms()) {
    for (Mor g = 0; g < dom_.num_morphisms(); ++g) {
      for (Mor f = 0; f < dom_.num_morphisms(); ++f) {
        const Mor h = dom_.compose_or_none(g, f);
        if (h == kNone) continue;
        checks_[std::max({g, f, h})].push_back({g, f, h});
      }
    }
  }

  std::size_t run() {
    assign_object(0);
    return nodes_;
  }

 private:
  void tick() {
    if (++nodes_ > options_.limits.candidate_limit) over_budget(options_.limits.candidate_limit);
  }

  bool hom_sizes_match(Obj x, Obj y) const {
    return dom_.hom(x, y).size() == cod_.hom(objects_[x], objects_[y]).size();
  }

  void assign_object(Obj x) {
    if (stopped_) return;
    if (x == dom_.num_objects()) {
      if (object_filter_ && !object_filter_(objects_)) return;
      assign_morphism(0);
      return;
    }
    for (Obj y = 0; y < cod_.num_objects() && !stopped_; ++y) {
      tick();
      objects_[x] = y;
      bool ok = true;
      if (options_.fully_faithful) {
        for (Obj w = 0; w <= x && ok; ++w) ok = hom_sizes_match(x, w) && hom_sizes_match(w, x);
      }
      if (ok) assign_object(x + 1);
    }
    objects_[x] = kNone;
  }

  bool consistent_at(Mor k) const {
    for (const auto& [g, f, h] : checks_[k]) {
      if (cod_.compose_or_none(morphisms_[g], morphisms_[f]) != morphisms_[h]) return false;
    }
    return true;
  }

  bool injective_on_hom(Mor k) const {
    for (Mor other : dom_.hom(dom_.src(k), dom_.tgt(k))) {
      if (other >= k) break;
      if (morphisms_[other] == morphisms_[k]) return false;
    }
    return true;
  }

  void try_candidate(Mor k, Mor candidate) {
    tick();
    morphisms_[k] = candidate;
    if (options_.fully_faithful && !injective_on_hom(k)) return;
    if (consistent_at(k)) assign_morphism(k + 1);
  }

  void assign_morphism(Mor k) {
    if (stopped_) return;
    if (k == dom_.num_morphisms()) {
      if (!visit_(FinFunctor::trusted(dom_ptr_, cod_ptr_, objects_, morphisms_))) stopped_ = true;
      return;
    }
    const Obj x = objects_[dom_.src(k)];
    const Obj y = objects_[dom_.tgt(k)];
    if (dom_.is_identity(k)) {
      try_candidate(k, cod_.identity(x));
    } else {
      for (Mor candidate : cod_.hom(x, y)) {
        if (stopped_) break;
        try_candidate(k, candidate);
      }
    }
    morphisms_[k] = kNone;
  }

  CategoryPtr dom_ptr_;
  CategoryPtr cod_ptr_;
  const FinCategory& dom_;
  const FinCategory& cod_;
  const FunctorSearchOptions& options_;
  std::function<bool(const std::vector<Obj>&)> object_filter_;
  std::function<bool(const FinFunctor&)> visit_;
  std::vector<Obj> objects_;
  std::vector<Mor> morphisms_;
  std::vector<std::vector<std::array<Mor, 3>>> checks_;  // composites whose largest index is k
  std::size_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::size_t for_each_functor(const CategoryPtr& dom, const CategoryPtr& cod,
                             const std::function<bool(const FinFunctor&)>& visit,
                             const FunctorSearchOptions& options) {
  FunctorSearch search(dom, cod, options, nullptr, visit);
  return search.run();
}

std::size_t for_each_natural_isomorphism(const FinFunctor& f, const FinFunctor& g,
                                         const std::function<bool(const NatTransformation&)>& visit,
                                         std::size_t candidate_limit) {
  if (!same_category(f.domain_ptr(), g.domain_ptr()) || !same_category(f.codomain_ptr(), g.codomain_ptr())) {
    throw Error("NaturalityViolation", "functors are not parallel");
  }
  const FinCategory& d = f.domain();
  const FinCategory& c = f.codomain();
  const std::size_t n = d.num_objects();

  // Naturality squares whose endpoints are both assigned once object x is.
  std::vector<std::vector<Mor>> squares(n);
  for (Mor m = 0; m < d.num_morphisms(); ++m) squares[std::max(d.src(m), d.tgt(m))].push_back(m);

  std::vector<std::vector<Mor>> candidates(n);
  for (Obj x = 0; x < n; ++x) {
    for (Mor eta : c.hom(f.on_object(x), g.on_object(x))) {
      if (is_isomorphism(c, eta)) candidates[x].push_back(eta);
    }
  }

  std::vector<Mor> components(n, kNone);
  std::size_t nodes = 0;
  bool stopped = false;
  std::function<void(Obj)> assign = [&](Obj x) {
    if (stopped) return;
    if (x == n) {
      if (!visit(NatTransformation::trusted(f, g, components))) stopped = true;
      return;
    }
    for (Mor eta : candidates[x]) {
      if (stopped) break;
      if (++nodes > candidate_limit) over_budget(candidate_limit);
      components[x] = eta;
      bool ok = true;
      for (Mor m : squares[x]) {
        if (c.compose_or_none(g.on_morphism(m), components[d.src(m)]) !=
            c.compose_or_none(components[d.tgt(m)], f.on_morphism(m))) {
          ok = false;
          break;
        }
      }
      if (ok) assign(x + 1);
    }
    components[x] = kNone;
  };
  assign(0);
  return nodes;
}

std::optional<NatTransformation> find_natural_isomorphism(const FinFunctor& f, const FinFunctor& g,
                                                          std::size_t candidate_limit) {
  std::optional<NatTransformation> found;
  for_each_natural_isomorphism(
      f, g,
      [&](const NatTransformation& t) {
        found = t;
        return false;
      },
      candidate_limit);
  return found;
}

EquivalenceResult are_equivalent(const CategoryPtr& c, const CategoryPtr& d, const SearchLimits& limits) {
  for (const auto* cat : {c.get(), d.get()}) {
    if (cat->num_objects() * cat->num_morphisms() > limits.size_limit) {
      throw Error("BudgetExceeded", "category exceeds the size budget");
    }
  }
  EquivalenceResult result;
  auto essentially_surjective = [&](const std::vector<Obj>& objects) {
    for (Obj y = 0; y < d->num_objects(); ++y) {
      const bool hit = std::any_of(objects.begin(), objects.end(),
                                   [&](Obj image) { return isomorphic_objects(*d, image, y); });
      if (!hit) return false;
    }
    return true;
  };
  FunctorSearchOptions options{limits, true};
  auto visit = [&](const FinFunctor& witness) {
    result.equivalent = true;
    result.witness = witness;
    return false;
  };
  FunctorSearch search(c, d, options, essentially_surjective, visit);
  result.candidates_explored = search.run();
  return result;
}

Subcategory full_subcategory(const CategoryPtr& c, std::span<const Obj> objects) {
  std::vector<std::size_t> position(c->num_objects(), kNone);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    position[objects[i]] = i;
    labels.push_back(c->object_label(objects[i]));
  }
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> old_index;
  std::vector<Mor> new_index(c->num_morphisms(), kNone);
  for (Mor f = 0; f < c->num_morphisms(); ++f) {
    if (position[c->src(f)] == kNone || position[c->tgt(f)] == kNone) continue;
    new_index[f] = morphisms.size();
    old_index.push_back(f);
    morphisms.push_back({c->morphism_label(f), position[c->src(f)], position[c->tgt(f)]});
  }
  std::vector<Mor> identities;
  for (Obj x : objects) identities.push_back(new_index[c->identity(x)]);
  auto sub = share(FinCategory::from_rule(std::move(labels), std::move(morphisms), std::move(identities),
                                          [&](Mor g, Mor f) {
                                            return new_index[c->compose_or_none(old_index[g], old_index[f])];
                                          }));
  auto inclusion = FinFunctor::trusted(sub, c, {objects.begin(), objects.end()}, old_index);
  return {std::move(sub), std::move(inclusion)};
}

Subcategory skeleton(const CategoryPtr& c) {
  const auto rep = isomorphism_class_representatives(*c);
  std::vector<Obj> keep;
  for (Obj x = 0; x < rep.size(); ++x) {
    if (rep[x] == x) keep.push_back(x);
  }
  return full_subcategory(c, keep);
}

}  // namespace layercake
