#pragma once

// Group cohomology H^n_ρ(G, A) from normalized bar cochains.
//
// A normalized n-cochain stores one value per tuple of non-identity elements,
// in mixed radix with the first argument most significant; tuples containing
// the identity read as 0. Unnormalized cochains store every tuple of G^n.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "layercake/abelian.hpp"
#include "layercake/group.hpp"

namespace layercake {

/// A with a left G-action ρ by automorphisms.
struct GModule {
  FinGroup group;
  FinAbGroup coefficients;
  std::vector<AbHom> action;  // indexed by group element

  /// Checks ρ(e) = id and ρ(g)ρ(h) = ρ(gh). Throws ActionViolation.
  static GModule make(FinGroup group, FinAbGroup coefficients, std::vector<AbHom> action);
  static GModule trivial(FinGroup group, FinAbGroup coefficients);

  AbElem act(Elem g, const AbElem& a) const { return action[g].apply(a); }
};

struct CohomologyLimits {
  std::size_t max_degree = 8;
  /// Bound on tuples × rank(A) in the target degree of an assembled differential.
  std::size_t size_guard = 4096;
  /// Bound on |A|^(number of tuples) for brute-force enumeration.
  std::size_t enumeration_bound = 10'000'000;
};

struct Cochain {
  std::size_t degree = 0;
  bool normalized = true;
  std::vector<AbElem> values;  // one per stored tuple

  bool operator==(const Cochain&) const = default;

  static Cochain zero(const GModule& m, std::size_t degree, bool normalized = true);
  /// Value at an arbitrary tuple (0 at identity arguments when normalized).
  AbElem value_at(const GModule& m, std::span<const Elem> args) const;
  /// Throws NormalizationViolation when normalized and some argument is the identity.
  void set_value(const GModule& m, std::span<const Elem> args, const AbElem& value);
};

/// Number of stored tuples for a degree.
std::size_t cochain_length(const FinGroup& g, std::size_t degree, bool normalized = true);
/// The tuple stored at `index`.
std::vector<Elem> cochain_arguments(const FinGroup& g, std::size_t degree, std::size_t index, bool normalized = true);
std::size_t cochain_index(const FinGroup& g, std::span<const Elem> args, bool normalized = true);

/// The group of n-cochains, a power of A; coordinates follow stored tuple order.
FinAbGroup cochain_group(const GModule& m, std::size_t degree, bool normalized = true);
AbElem flatten(const Cochain& c);
Cochain unflatten(const GModule& m, std::size_t degree, const AbElem& x, bool normalized = true);
Cochain add(const GModule& m, const Cochain& a, const Cochain& b);
Cochain subtract(const GModule& m, const Cochain& a, const Cochain& b);

/// (dc)(g₀,…,gₙ) = ρ(g₀)c(g₁,…,gₙ) + Σᵢ (−1)ⁱ c(…,gᵢ₋₁gᵢ,…) + (−1)ⁿ⁺¹ c(g₀,…,gₙ₋₁).
/// Throws DegreeOverflow.
Cochain differential(const Cochain& c, const GModule& m, const CohomologyLimits& limits = {});

/// dₙ : Cⁿ → Cⁿ⁺¹ as a matrix. Throws DegreeOverflow, SizeGuard.
AbHom differential_matrix(const GModule& m, std::size_t degree, bool normalized = true,
                          const CohomologyLimits& limits = {});

bool is_cocycle(const Cochain& c, const GModule& m);
/// b with db = c, if any. Throws DegreeMismatch for degree 0.
std::optional<Cochain> is_coboundary(const Cochain& c, const GModule& m, const CohomologyLimits& limits = {});
/// Throws DegreeMismatch.
bool cohomologous(const Cochain& a, const Cochain& b, const GModule& m, const CohomologyLimits& limits = {});

struct CohomologyResult {
  GModule module;
  std::size_t degree = 0;
  bool normalized = true;
  FinAbGroup group;  // canonical
  /// Lexicographically least cocycle in the class of each standard generator.
  std::vector<Cochain> representatives;

  Subgroup cocycles;             // ker dₙ ⊆ Cⁿ
  Quotient classes;              // ker dₙ → Hⁿ
  std::vector<AbElem> boundaries;  // generators of im dₙ₋₁ in Cⁿ

  /// Class of a cocycle. Throws NotACocycle.
  AbElem class_of(const Cochain& c) const;
  /// Lexicographically least cocycle in a class.
  Cochain representative(const AbElem& h) const;
};

/// ker dₙ / im dₙ₋₁. Throws DegreeOverflow, SizeGuard.
CohomologyResult cohomology(const GModule& m, std::size_t degree, bool normalized = true,
                            const CohomologyLimits& limits = {});

struct BruteForceCohomology {
  BigInt cocycle_count;
  BigInt coboundary_count;
  BigInt class_count;
  std::map<std::int64_t, BigInt> classes_by_order;
  FinAbGroup group;  // reconstructed from the order statistics
};

/// Coordinates for an abelian FinGroup as a canonical FinAbGroup.
struct AbelianCoordinates {
  FinAbGroup group;
  std::vector<AbElem> of_element;  // indexed by group element
  std::map<AbElem, Elem> element_of;
};

/// Throws NotAbelian.
AbelianCoordinates abelian_coordinates(const FinGroup& g);

/// Enumerates every cochain with the direct formula. Throws EnumerationBound.
BruteForceCohomology brute_force_cohomology(const GModule& m, std::size_t degree, bool normalized = true,
                                            const CohomologyLimits& limits = {});

}  // namespace layercake
