#pragma once

// Finite categories presented by total composition tables, together with
// functors, natural transformations and the exhaustive searches built on them.
//
// Objects and morphisms are dense indices. Every search that has to pick a
// representative breaks ties by lowest index so results are deterministic.

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "layercake/error.hpp"

namespace layercake {

using Obj = std::size_t;
using Mor = std::size_t;

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct MorphismSpec {
  std::string label;
  Obj src = 0;
  Obj tgt = 0;

  bool operator==(const MorphismSpec&) const = default;
};

/// Raw, unvalidated description of a category.
struct CategoryPresentation {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> identities;                  // one per object
  std::vector<std::array<Mor, 3>> composition;  // {g, f, g∘f}

  bool operator==(const CategoryPresentation&) const = default;
};

class FinCategory {
 public:
  /// Checks the presentation exhaustively (composite typing, totality,
  /// unit laws, associativity) and builds the category.
  static FinCategory validate(const CategoryPresentation& raw);

  /// Same checks, but composites come from `compose(g, f)`, which is called
  /// once for every composable pair and may return kNone to signal a gap.
  static FinCategory from_rule(std::vector<std::string> objects,
                               std::vector<MorphismSpec> morphisms,
                               std::vector<Mor> identities,
                               const std::function<Mor(Mor, Mor)>& compose);

  FinCategory() = default;

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  bool empty() const { return objects_.empty(); }

  const std::string& object_label(Obj x) const { return objects_.at(x); }
  const std::string& morphism_label(Mor f) const { return morphisms_.at(f).label; }
  std::optional<Obj> find_object(std::string_view label) const;
  std::optional<Mor> find_morphism(std::string_view label) const;

  Obj src(Mor f) const { return morphisms_[f].src; }
  Obj tgt(Mor f) const { return morphisms_[f].tgt; }
  Mor identity(Obj x) const { return identities_[x]; }
  bool is_identity(Mor f) const { return identities_[src(f)] == f; }

  bool composable(Mor g, Mor f) const { return tgt(f) == src(g); }
  /// g∘f. Throws NotComposable if tgt(f) != src(g).
  Mor compose(Mor g, Mor f) const;
  /// g∘f without the composability check; kNone when not composable.
  Mor compose_or_none(Mor g, Mor f) const { return table_[g * morphisms_.size() + f]; }

  /// Morphisms x → y in index order.
  std::span<const Mor> hom(Obj x, Obj y) const { return homs_[x * objects_.size() + y]; }

  CategoryPresentation presentation() const;

  bool operator==(const FinCategory& other) const {
    return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
           identities_ == other.identities_ && table_ == other.table_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismSpec> morphisms_;
  std::vector<Mor> identities_;
  std::vector<Mor> table_;  // m×m, row g, column f
  std::vector<std::vector<Mor>> homs_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

/// Structural equality, short-circuiting on pointer identity.
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

/// All and only the morphisms x → y, in table order. Throws UnknownObject.
std::vector<Mor> hom_set(const FinCategory& c, Obj x, Obj y);

/// The inverse of f if f is an isomorphism (lowest-index inverse).
std::optional<Mor> inverse_of(const FinCategory& c, Mor f);
bool is_isomorphism(const FinCategory& c, Mor f);

/// First isomorphism x → y by index, if any.
std::optional<Mor> find_isomorphism(const FinCategory& c, Obj x, Obj y);
bool isomorphic_objects(const FinCategory& c, Obj x, Obj y);

/// For every object, the lowest-index object isomorphic to it.
std::vector<Obj> isomorphism_class_representatives(const FinCategory& c);

bool is_groupoid(const FinCategory& c);
/// Every hom-set has at most one element.
bool is_thin(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

class FinFunctor {
 public:
  /// Validates preservation of endpoints, identities and every composite.
  static FinFunctor make(CategoryPtr domain, CategoryPtr codomain, std::vector<Obj> objects,
                         std::vector<Mor> morphisms);
  static FinFunctor identity(CategoryPtr c);
  /// No validation; for constructions and searches that guarantee functoriality.
  static FinFunctor trusted(CategoryPtr domain, CategoryPtr codomain, std::vector<Obj> objects,
                            std::vector<Mor> morphisms) {
    return FinFunctor(std::move(domain), std::move(codomain), std::move(objects), std::move(morphisms));
  }

  const FinCategory& domain() const { return *domain_; }
  const FinCategory& codomain() const { return *codomain_; }
  const CategoryPtr& domain_ptr() const { return domain_; }
  const CategoryPtr& codomain_ptr() const { return codomain_; }

  Obj on_object(Obj x) const { return objects_[x]; }
  Mor on_morphism(Mor f) const { return morphisms_[f]; }
  std::span<const Obj> object_map() const { return objects_; }
  std::span<const Mor> morphism_map() const { return morphisms_; }

  /// Same domain, codomain and tables.
  bool operator==(const FinFunctor& other) const;

 private:
  FinFunctor(CategoryPtr d, CategoryPtr c, std::vector<Obj> o, std::vector<Mor> m)
      : domain_(std::move(d)), codomain_(std::move(c)), objects_(std::move(o)), morphisms_(std::move(m)) {}

  CategoryPtr domain_;
  CategoryPtr codomain_;
  std::vector<Obj> objects_;
  std::vector<Mor> morphisms_;
};

/// g∘f.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
FinFunctor opposite(const FinFunctor& f, CategoryPtr domain_op, CategoryPtr codomain_op);

class NatTransformation {
 public:
  /// components[x] : source(x) → target(x); every naturality square is checked.
  static NatTransformation make(FinFunctor source, FinFunctor target, std::vector<Mor> components);
  static NatTransformation identity(const FinFunctor& f);
  static NatTransformation trusted(FinFunctor source, FinFunctor target, std::vector<Mor> components) {
    return NatTransformation(std::move(source), std::move(target), std::move(components));
  }

  const FinFunctor& source() const { return source_; }
  const FinFunctor& target() const { return target_; }
  Mor component(Obj x) const { return components_[x]; }
  std::span<const Mor> components() const { return components_; }

  bool is_isomorphism() const;

 private:
  NatTransformation(FinFunctor s, FinFunctor t, std::vector<Mor> c)
      : source_(std::move(s)), target_(std::move(t)), components_(std::move(c)) {}

  FinFunctor source_;
  FinFunctor target_;
  std::vector<Mor> components_;
};

struct FinGroupoid {
  CategoryPtr category;
  std::vector<Mor> inverse;  // inverse[f] ∘ f = id, f ∘ inverse[f] = id

  /// The inverse witness, or nullopt if some morphism is not invertible.
  static std::optional<FinGroupoid> from(CategoryPtr c);
};

struct SearchLimits {
  std::size_t candidate_limit = 1'000'000;  // search nodes before BudgetExceeded
  std::size_t size_limit = 1u << 16;        // objects × morphisms per category
};

struct FunctorSearchOptions {
  SearchLimits limits;
  /// Restrict to functors that are bijective on every hom-set.
  bool fully_faithful = false;
};

/// Enumerates functors dom → cod by backtracking over object maps, then
/// morphism maps in index order. `visit` returns false to stop early.
/// Returns the number of search nodes expanded. Throws BudgetExceeded.
std::size_t for_each_functor(const CategoryPtr& dom, const CategoryPtr& cod,
                             const std::function<bool(const FinFunctor&)>& visit,
                             const FunctorSearchOptions& options = {});

/// Enumerates natural isomorphisms f ⇒ g (f, g parallel). Throws BudgetExceeded.
std::size_t for_each_natural_isomorphism(const FinFunctor& f, const FinFunctor& g,
                                         const std::function<bool(const NatTransformation&)>& visit,
                                         std::size_t candidate_limit = 1'000'000);

std::optional<NatTransformation> find_natural_isomorphism(const FinFunctor& f, const FinFunctor& g,
                                                          std::size_t candidate_limit = 1'000'000);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<FinFunctor> witness;  // essentially surjective, full and faithful
  std::size_t candidates_explored = 0;
};

/// Exhaustive search for an equivalence c → d. A negative verdict is a proof
/// by exhaustion. Throws BudgetExceeded when either category exceeds the size
/// limit or the search exceeds the candidate limit.
EquivalenceResult are_equivalent(const CategoryPtr& c, const CategoryPtr& d,
                                 const SearchLimits& limits = {});

struct Subcategory {
  CategoryPtr category;
  FinFunctor inclusion;
};

/// Full subcategory on `objects` (kept in the given order).
Subcategory full_subcategory(const CategoryPtr& c, std::span<const Obj> objects);

/// One object per isomorphism class (lowest index), with its inclusion.
Subcategory skeleton(const CategoryPtr& c);

}  // namespace layercake
