#pragma once

// Monoids as pointed one-object categories, pointed functors and their
// strictification, connectedness, and truncated nerves.

#include <optional>
#include <vector>

#include "layercake/fincat.hpp"

namespace layercake {

class Monoid {
 public:
  /// Throws MonoidViolation.
  static Monoid from_table(std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  bool is_group() const;

  bool operator==(const Monoid&) const = default;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

struct PointedCategory {
  CategoryPtr category;
  Obj basepoint = 0;

  /// Throws UnknownObject.
  static PointedCategory make(CategoryPtr category, Obj basepoint);
};

struct PointedFunctor {
  PointedCategory domain;
  PointedCategory codomain;
  FinFunctor functor;
  Mor pointing;  // isomorphism functor(∗) → ∗′

  /// Throws PointingViolation.
  static PointedFunctor make(PointedCategory domain, PointedCategory codomain, FinFunctor functor, Mor pointing);
  bool is_strict() const;
};

/// One object ∗ whose morphisms are the elements, composing as g∘f = g·f.
PointedCategory deloop(const Monoid& m);
/// hom(∗, ∗) under composition, in hom order.
Monoid loop(const PointedCategory& p);
/// The pointed functor B(h) of a monoid homomorphism. Throws HomomorphismViolation.
PointedFunctor deloop(const Monoid& a, const Monoid& b, const std::vector<std::size_t>& h);

struct Strictification {
  PointedFunctor strict;          // sends ∗ to ∗′ with identity pointing
  NatTransformation connecting;   // original ⇒ strict, component at ∗ the old pointing
};

Strictification strictify_pointed(const PointedFunctor& pf);

/// j = −1: nonempty; j = 0: all objects isomorphic; j = 1: parallel morphisms
/// agree. Decided by lifting against the probe inclusions ∅ → 1, 1+1 → codiscrete(2)
/// and the parallel pair → the arrow category. Throws InvalidLevel.
bool has_no_j_homotopy(const FinCategory& c, int j);
/// No j-homotopy for every −1 ≤ j ≤ k, k ∈ {−2, −1, 0, 1}. Throws InvalidLevel.
bool k_connected(const FinCategory& c, int k);

struct Simplex {
  Obj start = 0;
  std::vector<Mor> arrows;  // composable, first arrow leaves `start`

  auto operator<=>(const Simplex&) const = default;
};

struct TruncatedSimplicialSet {
  std::size_t max_dimension = 0;
  std::vector<std::vector<Simplex>> simplices;                         // [n][k]
  std::vector<std::vector<std::vector<std::size_t>>> faces;            // [n][i][k] for n ≥ 1
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;     // [n][i][k] for n < N

  std::size_t count(std::size_t n) const { return simplices[n].size(); }
  std::size_t nondegenerate_count(std::size_t n, const FinCategory& c) const;
};

/// Composable chains up to dimension N with faces by composition/truncation and
/// degeneracies by inserting identities; every simplicial identity is checked.
/// Throws DimensionBound, SimplicialViolation.
TruncatedSimplicialSet nerve(const FinCategory& c, std::size_t max_dimension, std::size_t dimension_bound = 6,
                             std::size_t simplex_bound = 1'000'000);

}  // namespace layercake
