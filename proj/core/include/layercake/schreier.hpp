#pragma once

// Schreier theory for finite group extensions 1 → F → E → B → 1.

#include <optional>
#include <string>
#include <vector>

#include "layercake/cohomology.hpp"
#include "layercake/group.hpp"

namespace layercake {

struct Extension {
  FinGroup f;
  FinGroup e;
  FinGroup b;
  GroupHom i;  // F → E
  GroupHom p;  // E → B

  /// Throws HomomorphismViolation or ExactnessViolation.
  static Extension make(FinGroup f, FinGroup e, FinGroup b, std::vector<Elem> i, std::vector<Elem> p);
};

/// E → E/N with F = N (elements in increasing order) and cosets numbered by
/// their least element. Throws NotNormal.
Extension extension_from_normal_subgroup(const FinGroup& e, const std::vector<Elem>& normal);

/// Normal subgroups of g, each sorted, in lexicographic order.
std::vector<std::vector<Elem>> normal_subgroups(const FinGroup& g);

/// s : B → E with p∘s = id.
struct SetSection {
  std::vector<Elem> map;

  bool operator==(const SetSection&) const = default;
};

/// Least preimage of each b, with s(e) = e.
SetSection choose_section(const Extension& ext);
/// Every section with s(e) = e, in lexicographic order. Throws EnumerationBound.
std::vector<SetSection> all_normalized_sections(const Extension& ext, std::size_t limit = 1'000'000);

struct NonabelianCocycle {
  FinGroup b;
  FinGroup f;
  std::vector<std::vector<Elem>> phi;  // phi[b][x]: automorphism of F attached to b
  std::vector<Elem> factor;            // factor[b₁·|B| + b₂]

  Elem factor_at(Elem b1, Elem b2) const { return factor[b1 * b.order() + b2]; }
  bool operator==(const NonabelianCocycle&) const = default;
};

/// phi(b) = i⁻¹(s(b)·i(−)·s(b)⁻¹), factor(b, b′) = i⁻¹(s(bb′)(s(b)s(b′))⁻¹).
/// Throws SectionViolation (also for s(e) ≠ e unless `allow_unnormalized`).
NonabelianCocycle extract_cocycle(const Extension& ext, const SetSection& s, bool allow_unnormalized = false);

struct CocycleVerdict {
  bool holds = false;
  std::string law;            // "normalization", "automorphism", "conjugation" or "associativity"
  std::vector<Elem> witness;  // the violating tuple
};

/// (i)  factor(b,b′)·phi(b)(phi(b′)(x))·factor(b,b′)⁻¹ = phi(bb′)(x)
/// (ii) factor(b₁b₂,b₃)·factor(b₁,b₂) = factor(b₁,b₂b₃)·phi(b₁)(factor(b₂,b₃))
/// plus normalization and each phi(b) being an automorphism.
CocycleVerdict check_cocycle_conditions(const NonabelianCocycle& c);

/// Crossed product on F × B, element (x, b) at index x·|B| + b, with
/// (x₁, b₁)(x₂, b₂) = (x₁·phi(b₁)(x₂)·factor(b₁,b₂)⁻¹, b₁b₂). Throws CocycleInvalid.
Extension build_extension(const NonabelianCocycle& c);

/// An isomorphism θ : E₁ → E₂ with θ∘i₁ = i₂ and p₂∘θ = p₁, if any.
/// Throws BudgetExceeded.
std::optional<std::vector<Elem>> extension_equivalence(const Extension& a, const Extension& b,
                                                       std::size_t candidate_limit = 1'000'000);
bool extensions_equivalent(const Extension& a, const Extension& b, std::size_t candidate_limit = 1'000'000);

struct Aut2Group {
  FinGroup f;
  std::vector<std::vector<Elem>> automorphisms;  // sorted
  /// two_cells[α][β] = {g : g·α(x)·g⁻¹ = β(x) for all x}.
  std::vector<std::vector<std::vector<Elem>>> two_cells;
};

Aut2Group build_aut2group(const FinGroup& f, std::size_t candidate_limit = 1'000'000);

struct AbelianCocycle {
  GModule module;           // F with the action phi
  Cochain cochain;          // degree 2
  AbelianCoordinates coordinates;
};

/// Throws NotAbelian, ActionNotHomomorphic.
AbelianCocycle to_abelian_cocycle(const NonabelianCocycle& c);

struct CentralExtensionCount {
  std::size_t by_cohomology = 0;   // |H²(B, F)| from the matrix computation
  std::size_t by_cochains = 0;     // cocycles modulo coboundaries, by enumeration
  std::size_t by_extensions = 0;   // crossed products modulo extensions_equivalent
  std::vector<Extension> representatives;
};

/// Central extensions of B by an abelian F, counted three ways.
/// Throws NotAbelian, EnumerationBound.
CentralExtensionCount classify_central_extensions(const FinGroup& b, const FinGroup& f,
                                                  std::size_t enumeration_limit = 1'000'000);

}  // namespace layercake
