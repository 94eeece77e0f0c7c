#pragma once

// Discrete opfibrations over a finite base and the set-valued functors that
// classify them, plus a checker for strict Grothendieck fibrations.

#include <optional>
#include <string>
#include <vector>

#include "layercake/fincat.hpp"

namespace layercake {

/// F : B → Set with finite values. maps[f][x] is the index of F(f)(x) in sets[tgt f].
struct SetValuedFunctor {
  CategoryPtr base;
  std::vector<std::vector<std::string>> sets;
  std::vector<std::vector<std::size_t>> maps;

  /// Checks sizes, identities and every composite. Throws FunctorViolation.
  static SetValuedFunctor make(CategoryPtr base, std::vector<std::vector<std::string>> sets,
                               std::vector<std::vector<std::size_t>> maps);
  /// The constant one-point functor.
  static SetValuedFunctor point(CategoryPtr base);
};

struct GrothendieckConstruction {
  CategoryPtr total;
  FinFunctor projection;
  /// (base object, element index) for every object of `total`.
  std::vector<std::pair<Obj, std::size_t>> elements;
};

/// Category of elements: objects (b, x) in lexicographic order, one morphism
/// (b, x) → (b′, F(f)(x)) for every f : b → b′.
GrothendieckConstruction grothendieck_construct(const SetValuedFunctor& f);

struct LiftCounterexample {
  Mor morphism;        // in the base
  Obj source;          // object of the total category over src(morphism)
  std::size_t lifts;   // number of lifts with that source
};

struct OpfibrationVerdict {
  bool holds = false;
  std::optional<LiftCounterexample> counterexample;  // lowest (morphism, source)
};

OpfibrationVerdict check_discrete_opfibration(const FinFunctor& p);

/// Strict fibers and transport along unique lifts. Throws NotAFibration.
SetValuedFunctor reconstruct(const FinFunctor& p);

/// Componentwise bijections F(b) → G(b) commuting with every map, if any.
std::optional<std::vector<std::vector<std::size_t>>> set_functor_isomorphism(const SetValuedFunctor& f,
                                                                           const SetValuedFunctor& g);

/// An isomorphism of categories e → e′ commuting with the projections, if any.
std::optional<FinFunctor> isomorphism_over_base(const FinFunctor& p, const FinFunctor& q,
                                                const SearchLimits& limits = {});

struct CartesianCounterexample {
  Mor morphism;  // f : x → y in the base
  Obj target;    // object over y with no cartesian lift of f
};

struct FibrationVerdict {
  bool holds = false;
  std::optional<CartesianCounterexample> counterexample;
};

/// φ : e′ → e is cartesian when every ψ : e″ → e with p(ψ) = p(φ)∘g factors
/// uniquely as φ∘χ with p(χ) = g.
bool is_cartesian(const FinFunctor& p, Mor phi);

/// Every (f : x → y, e over y) has a cartesian lift, checked exhaustively.
FibrationVerdict check_grothendieck_fibration(const FinFunctor& p);

/// p^op : E^op → B^op, for passing between the fibration and opfibration conventions.
FinFunctor opposite_functor(const FinFunctor& p);

}  // namespace layercake
