#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "layercake/error.hpp"

namespace layercake {

using Elem = std::size_t;

/// A finite group given by its multiplication table; elements are 0..order-1.
class FinGroup {
 public:
  /// Validates closure, associativity, a two-sided identity and inverses.
  /// The identity is found by search. Throws GroupViolation.
  static FinGroup from_table(std::vector<std::vector<Elem>> table);

  static FinGroup trivial();
  static FinGroup cyclic(std::size_t n);
  /// Dihedral group of order 2n: rotations r^k are 0..n-1, reflections s·r^k are n..2n-1.
  static FinGroup dihedral(std::size_t n);
  static FinGroup quaternion();
  static FinGroup symmetric3();
  /// Index of (a, b) is a * |h| + b.
  static FinGroup direct_product(const FinGroup& g, const FinGroup& h);

  std::size_t order() const { return table_.size(); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  std::size_t element_order(Elem a) const;
  bool is_abelian() const;
  /// Non-identity elements in index order.
  std::vector<Elem> non_identity() const;
  /// Greedy generating set: each element not yet in the generated subgroup is added, in index order.
  std::vector<Elem> generators() const;
  /// Subgroup generated by `gens`, sorted.
  std::vector<Elem> closure(const std::vector<Elem>& gens) const;

  bool operator==(const FinGroup&) const = default;

 private:
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

struct GroupHom {
  FinGroup domain;
  FinGroup codomain;
  std::vector<Elem> map;

  /// Validates multiplicativity exhaustively. Throws HomomorphismViolation.
  static GroupHom make(FinGroup domain, FinGroup codomain, std::vector<Elem> map);

  Elem operator()(Elem a) const { return map[a]; }
  bool injective() const;
  bool surjective() const;
  std::vector<Elem> kernel() const;
  std::vector<Elem> image() const;
};

bool is_homomorphism(const FinGroup& g, const FinGroup& h, const std::vector<Elem>& map);

/// Enumerates the isomorphisms g → h by backtracking over images of g's
/// generators. `visit` returns false to stop. Throws BudgetExceeded.
std::size_t for_each_isomorphism(const FinGroup& g, const FinGroup& h,
                                 const std::function<bool(const std::vector<Elem>&)>& visit,
                                 std::size_t candidate_limit = 1'000'000);

std::vector<std::vector<Elem>> automorphisms(const FinGroup& g, std::size_t candidate_limit = 1'000'000);

bool groups_isomorphic(const FinGroup& g, const FinGroup& h, std::size_t candidate_limit = 1'000'000);

}  // namespace layercake
