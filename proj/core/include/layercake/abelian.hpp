#pragma once

// Finite abelian groups as direct sums of cyclic groups, with exact integer
// linear algebra (Smith normal form over arbitrary-precision integers).

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "layercake/error.hpp"

namespace layercake {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix; zero rows or columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U·M·V = D with U, V unimodular and D diagonal, d₁ | d₂ | …, all ≥ 0.
struct SmithNormalForm {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;  // M = u_inv · D · v_inv
  std::size_t rank = 0;

  BigInt diagonal(std::size_t i) const { return i < d.rows() && i < d.cols() ? d(i, i) : BigInt(0); }
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Integer vectors z with M·z = 0, as a basis (columns of V beyond the rank).
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& m);

/// Some integer z with M·z = t, if one exists.
std::optional<std::vector<BigInt>> integer_solve(const IntMatrix& m, const std::vector<BigInt>& t);

using AbElem = std::vector<std::int64_t>;

/// ⊕ ℤ/mᵢ with every mᵢ ≥ 2. Results of kernel, image and quotient are
/// canonical (m₁ | m₂ | …); cochain groups are plain powers of a coefficient group.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Throws InvalidGroup unless factors form a divisibility chain of integers ≥ 2.
  static FinAbGroup from_invariant_factors(std::vector<std::int64_t> factors);
  /// Any moduli ≥ 2. Throws InvalidGroup.
  static FinAbGroup direct_sum_of_cyclic(std::vector<std::int64_t> moduli);
  /// ℤ/n; trivial for n = 1.
  static FinAbGroup cyclic(std::int64_t n);
  static FinAbGroup trivial() { return {}; }

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t modulus(std::size_t i) const { return moduli_[i]; }
  std::size_t rank() const { return moduli_.size(); }
  bool is_canonical() const;
  /// Invariant factors of the isomorphism type.
  std::vector<std::int64_t> invariant_factors() const;
  BigInt order() const;

  AbElem zero() const { return AbElem(moduli_.size(), 0); }
  bool contains(const AbElem& x) const;
  /// Reduces every coordinate into [0, mᵢ).
  AbElem reduce(const AbElem& x) const;
  AbElem reduce(const std::vector<BigInt>& x) const;
  AbElem add(const AbElem& x, const AbElem& y) const;
  AbElem negate(const AbElem& x) const;
  AbElem subtract(const AbElem& x, const AbElem& y) const { return add(x, negate(y)); }
  AbElem scale(std::int64_t k, const AbElem& x) const;
  bool is_zero(const AbElem& x) const;
  std::int64_t element_order(const AbElem& x) const;

  /// Every element in lexicographic order. Throws EnumerationBound above `limit`.
  std::vector<AbElem> elements(std::size_t limit = 1u << 20) const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  explicit FinAbGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {}
  std::vector<std::int64_t> moduli_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup power(const FinAbGroup& a, std::size_t k);
/// Structural isomorphism test.
bool isomorphic(const FinAbGroup& a, const FinAbGroup& b);

/// x ↦ M·x, M of shape codomain.rank() × domain.rank(), entries reduced by row.
struct AbHom {
  FinAbGroup domain;
  FinAbGroup codomain;
  std::vector<std::vector<std::int64_t>> matrix;

  /// Checks shape and that every relation mⱼeⱼ maps to 0. Throws HomomorphismViolation.
  static AbHom make(FinAbGroup domain, FinAbGroup codomain, std::vector<std::vector<std::int64_t>> matrix);
  static AbHom identity(const FinAbGroup& g);
  static AbHom zero(const FinAbGroup& domain, const FinAbGroup& codomain);

  AbElem apply(const AbElem& x) const;
  bool operator==(const AbHom&) const = default;
};

AbHom compose(const AbHom& g, const AbHom& f);
bool is_automorphism(const AbHom& h);

struct Subgroup {
  FinAbGroup group;  // canonical
  AbHom inclusion;   // injective, into the ambient group
};

struct Quotient {
  FinAbGroup group;                   // canonical
  AbHom projection;                   // surjective, from the ambient group
  std::vector<AbElem> generator_lifts;  // lifts of the standard generators
};

/// ⟨gens⟩ ⊆ g.
Subgroup subgroup(const FinAbGroup& g, const std::vector<AbElem>& gens);
Subgroup kernel(const AbHom& h);
Subgroup image(const AbHom& h);
/// g / ⟨gens⟩.
Quotient quotient(const FinAbGroup& g, const std::vector<AbElem>& gens);
/// Some x with h(x) = target, if one exists.
std::optional<AbElem> solve(const AbHom& h, const AbElem& target);
/// The lexicographically least element of x + ⟨gens⟩.
AbElem coset_minimum(const FinAbGroup& g, const std::vector<AbElem>& gens, const AbElem& x);

/// ℤⁿ modulo the columns of `relations` (n rows), which must have finite index.
struct PresentedGroup {
  FinAbGroup group;  // canonical
  /// group coordinate i of v ∈ ℤⁿ is (projection[i] · v) mod mᵢ.
  std::vector<std::vector<std::int64_t>> projection;
  /// preimage in ℤⁿ of the i-th standard generator.
  std::vector<std::vector<BigInt>> lifts;
};

/// Throws InvalidGroup if the quotient is infinite.
PresentedGroup abelian_from_presentation(std::size_t generators, const IntMatrix& relations);

}  // namespace layercake
