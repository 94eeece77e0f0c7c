#pragma once

// j-surjectivity of functors between finite categories: profiles,
// forgetfulness verdicts, the three-stage factorization, essential fibers,
// dimension classification and orthogonality fillers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "layercake/fincat.hpp"

namespace layercake {

/// surj0: essentially surjective. surj1: full. surj2: faithful.
struct SurjectivityProfile {
  bool surj0 = false;
  bool surj1 = false;
  bool surj2 = false;

  bool operator==(const SurjectivityProfile&) const = default;
};

SurjectivityProfile surjectivity_profile(const FinFunctor& p);

enum class Forgets { Nothing, AtMostProperties, AtMostStructure, AtMostStuff };

struct ForgetfulnessVerdict {
  Forgets tag = Forgets::AtMostStuff;
  bool purely_stuff = false;       // 0- and 1-surjective
  bool purely_structure = false;   // 0- and 2-surjective
  bool purely_properties = false;  // 1- and 2-surjective
};

ForgetfulnessVerdict classify_forgetfulness(const FinFunctor& p);
ForgetfulnessVerdict classify_forgetfulness(const SurjectivityProfile& profile);

/// -2 for Nothing, -1 for AtMostProperties, 0 for AtMostStructure, 1 for AtMostStuff.
int forgetfulness_level(Forgets tag);

/// p₀ ∘ p₁ ∘ p₂ = p, with E′ and E″ built as hybrids of E and B.
struct FactorizationTower {
  CategoryPtr e_prime;         // objects of E, morphisms the image of p on each hom-set
  CategoryPtr e_double_prime;  // full subcategory of B on the essential image
  FinFunctor p2;               // E → E′
  FinFunctor p1;               // E′ → E″
  FinFunctor p0;               // E″ → B
  NatTransformation composite_iso;  // p₀∘p₁∘p₂ ≅ p
};

FactorizationTower factorize(const FinFunctor& p);

enum class FiberKind {
  Essential,  // objects (e, φ: p(e) ≅ x)
  Strict,     // objects e with p(e) = x, morphisms over id_x
};

struct FiberObject {
  Obj object;   // in E
  Mor witness;  // isomorphism p(e) → x in B; id_x for strict fibers
};

struct EssentialFiber {
  CategoryPtr category;
  std::vector<FiberObject> objects;  // indexed like category's objects
  FinFunctor projection;             // back to E
};

/// Throws UnknownObject.
EssentialFiber essential_fiber(const FinFunctor& p, Obj x, FiberKind kind = FiberKind::Essential);

enum class CategoryDimension { Minus2, Minus1, ZeroGroupoid, Poset01, OneGroupoid, OneCategory };

CategoryDimension classify_dimension(const FinCategory& c);
/// -2, -1, 0, 0, 1, 1 respectively.
int dimension_level(CategoryDimension d);
std::string to_string(CategoryDimension d);
std::string to_string(Forgets f);

struct FiberDimensionReport {
  std::vector<CategoryDimension> fibers;  // indexed by codomain object
  ForgetfulnessVerdict verdict;
  bool groupoid_input = false;
  /// Forgets at most k-stuff ⇒ every fiber has level ≤ k.
  bool forward_consistent = false;
  /// For groupoid inputs only: every fiber has level ≤ k ⇒ forgets at most k-stuff.
  bool converse_consistent = false;
};

FiberDimensionReport fiber_dimension_report(const FinFunctor& p);

/// k-surjective for every k > j; j ∈ {-1, 0, 1, 2}. Throws InvalidLevel.
bool is_j_monic(const FinFunctor& p, int j);

/// Commutative-up-to-iso square
///
///     E --top--> X
///     |          |
///     p          m
///     v          v
///     B -bottom> Y      with iso: m∘top ⇒ bottom∘p.
struct LiftingSquare {
  FinFunctor p;
  FinFunctor m;
  FinFunctor top;
  FinFunctor bottom;
  NatTransformation iso;

  /// Checks shapes and that iso is a natural isomorphism m∘top ⇒ bottom∘p.
  static LiftingSquare make(FinFunctor p, FinFunctor m, FinFunctor top, FinFunctor bottom,
                            NatTransformation iso);
};

/// h : B → X with α: h∘p ≅ top and β: m∘h ≅ bottom such that
/// iso_e ∘ m(α_e) = β_{p(e)} for every object e of E.
struct DiagonalFiller {
  FinFunctor h;
  NatTransformation upper;  // α
  NatTransformation lower;  // β
};

struct FillerReport {
  std::optional<DiagonalFiller> filler;  // lowest-index filler found
  std::size_t filler_count = 0;
  /// Any two fillers are related by exactly one compatible natural iso.
  bool essentially_unique = false;
  std::size_t candidates_explored = 0;
};

/// Exhaustive filler search. Throws BudgetExceeded.
FillerReport has_diagonal_filler(const LiftingSquare& square, std::size_t candidate_limit = 1'000'000);

}  // namespace layercake
