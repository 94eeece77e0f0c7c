#include "layercake/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace layercake {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t mod(Wide a, std::int64_t m) {
  Wide r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t to_int64(const BigInt& x, const char* what) {
  if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN)) throw Error("Overflow", std::string(what) + " exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

std::int64_t mod(const BigInt& a, std::int64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

/// Elementary operations applied to D while keeping U·M·V = D and the inverses current.
class SnfState {
 public:
  explicit SnfState(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_rows_of(d, i, j);
    swap_rows_of(u, i, j);
    swap_cols_of(u_inv, i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols_of(d, i, j);
    swap_cols_of(v, i, j);
    swap_rows_of(v_inv, i, j);
  }
  // row dst += k · row src
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    add_row_of(d, dst, src, k);
    add_row_of(u, dst, src, k);
    add_col_of(u_inv, src, dst, -k);
  }
  // col dst += k · col src
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    add_col_of(d, dst, src, k);
    add_col_of(v, dst, src, k);
    add_row_of(v_inv, src, dst, -k);
  }
  void negate_row(std::size_t i) {
    add_row_of(d, i, i, BigInt(-2));
    add_row_of(u, i, i, BigInt(-2));
    add_col_of(u_inv, i, i, BigInt(-2));
  }

  IntMatrix d, u, u_inv, v, v_inv;

 private:
  static void swap_rows_of(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  }
  static void swap_cols_of(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
  }
  static void add_row_of(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(src, c) != 0) m(dst, c) += k * m(src, c);
    }
  }
  static void add_col_of(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, src) != 0) m(r, dst) += k * m(r, src);
    }
  }
};

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("MalformedMatrix", "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("MalformedMatrix", "shape mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SnfState s(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto& d = s.d;

  // Smallest |entry| among rows ≥ t, cols ≥ t (row-major ties), restricted to
  // row t and column t when `cross_only`.
  // Returns {rows, cols} when the block is zero.
  auto find_pivot = [&](std::size_t t, bool cross_only) -> std::pair<std::size_t, std::size_t> {
    std::pair<std::size_t, std::size_t> best{rows, cols};
    BigInt best_abs;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (cross_only && i != t && j != t) continue;
        if (d(i, j) == 0) continue;
        BigInt a = abs(d(i, j));
        if (best.first == rows || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    }
    return best;
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    auto pivot = find_pivot(t, false);
    if (pivot.first == rows) break;
    s.swap_rows(t, pivot.first);
    s.swap_cols(t, pivot.second);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        s.add_row(i, t, -BigInt(d(i, t) / d(t, t)));
        dirty = dirty || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        s.add_col(j, t, -BigInt(d(t, j) / d(t, t)));
        dirty = dirty || d(t, j) != 0;
      }
      if (!dirty) {
        for (std::size_t i = t + 1; i < rows && !dirty; ++i) {
          for (std::size_t j = t + 1; j < cols && !dirty; ++j) {
            if (d(i, j) % d(t, t) != 0) {
              s.add_row(t, i, 1);
              dirty = true;
            }
          }
        }
      }
      if (!dirty) break;
      pivot = find_pivot(t, true);
      s.swap_rows(t, pivot.first);
      s.swap_cols(t, pivot.second);
    }
    if (d(t, t) < 0) s.negate_row(t);
  }
  return SmithNormalForm{std::move(s.u), std::move(s.d), std::move(s.v), std::move(s.u_inv), std::move(s.v_inv), t};
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) {
    std::vector<BigInt> column(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) column[i] = snf.v(i, j);
    basis.push_back(std::move(column));
  }
  return basis;
}

std::optional<std::vector<BigInt>> integer_solve(const IntMatrix& m, const std::vector<BigInt>& t) {
  if (t.size() != m.rows()) throw Error("MalformedMatrix", "right-hand side has the wrong length");
  const auto snf = smith_normal_form(m);
  // D·y = U·t, then z = V·y.
  std::vector<BigInt> w(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.rows(); ++k) w[i] += snf.u(i, k) * t[k];
  }
  std::vector<BigInt> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < snf.rank) {
      if (w[i] % snf.d(i, i) != 0) return std::nullopt;
      y[i] = w[i] / snf.d(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<BigInt> z(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t k = 0; k < snf.rank; ++k) z[i] += snf.v(i, k) * y[k];
  }
  return z;
}

PresentedGroup abelian_from_presentation(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators) throw Error("MalformedMatrix", "relation matrix must have one row per generator");
  const auto snf = smith_normal_form(relations);
  if (snf.rank < generators) throw Error("InvalidGroup", "presentation defines an infinite group");
  PresentedGroup out;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < generators; ++i) {
    const BigInt& di = snf.d(i, i);
    if (di == 1) continue;
    const std::int64_t m = to_int64(di, "invariant factor");
    factors.push_back(m);
    std::vector<std::int64_t> row(generators);
    for (std::size_t j = 0; j < generators; ++j) row[j] = mod(snf.u(i, j), m);
    out.projection.push_back(std::move(row));
    std::vector<BigInt> lift(generators);
    for (std::size_t j = 0; j < generators; ++j) lift[j] = snf.u_inv(j, i);
    out.lifts.push_back(std::move(lift));
  }
  out.group = FinAbGroup::from_invariant_factors(std::move(factors));
  return out;
}

FinAbGroup FinAbGroup::from_invariant_factors(std::vector<std::int64_t> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw Error("InvalidGroup", "invariant factors must be at least 2");
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw Error("InvalidGroup", "invariant factors must form a divisibility chain");
    }
  }
  return FinAbGroup(std::move(factors));
}

FinAbGroup FinAbGroup::direct_sum_of_cyclic(std::vector<std::int64_t> moduli) {
  for (std::int64_t m : moduli) {
    if (m < 2) throw Error("InvalidGroup", "cyclic summands must have order at least 2");
  }
  return FinAbGroup(std::move(moduli));
}

FinAbGroup FinAbGroup::cyclic(std::int64_t n) {
  if (n < 1) throw Error("InvalidGroup", "cyclic group order must be positive");
  if (n == 1) return trivial();
  return FinAbGroup({n});
}

bool FinAbGroup::is_canonical() const {
  for (std::size_t i = 1; i < moduli_.size(); ++i) {
    if (moduli_[i] % moduli_[i - 1] != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> FinAbGroup::invariant_factors() const {
  if (is_canonical()) return moduli_;
  IntMatrix rel(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) rel(i, i) = moduli_[i];
  return abelian_from_presentation(rank(), rel).group.moduli();
}

BigInt FinAbGroup::order() const {
  BigInt n = 1;
  for (std::int64_t m : moduli_) n *= m;
  return n;
}

bool FinAbGroup::contains(const AbElem& x) const {
  if (x.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  }
  return true;
}

AbElem FinAbGroup::reduce(const AbElem& x) const {
  if (x.size() != rank()) throw Error("ShapeMismatch", "element has the wrong number of coordinates");
  AbElem out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(Wide(x[i]), moduli_[i]);
  return out;
}

AbElem FinAbGroup::reduce(const std::vector<BigInt>& x) const {
  if (x.size() != rank()) throw Error("ShapeMismatch", "element has the wrong number of coordinates");
  AbElem out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(x[i], moduli_[i]);
  return out;
}

AbElem FinAbGroup::add(const AbElem& x, const AbElem& y) const {
  AbElem out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(Wide(x[i]) + y[i], moduli_[i]);
  return out;
}

AbElem FinAbGroup::negate(const AbElem& x) const {
  AbElem out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(-Wide(x[i]), moduli_[i]);
  return out;
}

AbElem FinAbGroup::scale(std::int64_t k, const AbElem& x) const {
  AbElem out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = mod(Wide(k) * x[i], moduli_[i]);
  return out;
}

bool FinAbGroup::is_zero(const AbElem& x) const {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t FinAbGroup::element_order(const AbElem& x) const {
  std::int64_t order = 1;
  for (std::size_t i = 0; i < rank(); ++i) order = std::lcm(order, moduli_[i] / std::gcd(x[i], moduli_[i]));
  return order;
}

std::vector<AbElem> FinAbGroup::elements(std::size_t limit) const {
  if (order() > limit) throw Error("EnumerationBound", "group has more than " + std::to_string(limit) + " elements");
  std::vector<AbElem> out;
  AbElem x = zero();
  for (;;) {
    out.push_back(x);
    std::size_t i = rank();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++x[i] < moduli_[i]) break;
      x[i] = 0;
    }
  }
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  auto moduli = a.moduli();
  moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  return FinAbGroup::direct_sum_of_cyclic(std::move(moduli));
}

FinAbGroup power(const FinAbGroup& a, std::size_t k) {
  std::vector<std::int64_t> moduli;
  moduli.reserve(a.rank() * k);
  for (std::size_t i = 0; i < k; ++i) moduli.insert(moduli.end(), a.moduli().begin(), a.moduli().end());
  return FinAbGroup::direct_sum_of_cyclic(std::move(moduli));
}

bool isomorphic(const FinAbGroup& a, const FinAbGroup& b) { return a.invariant_factors() == b.invariant_factors(); }

AbHom AbHom::make(FinAbGroup domain, FinAbGroup codomain, std::vector<std::vector<std::int64_t>> matrix) {
  if (matrix.size() != codomain.rank()) throw Error("HomomorphismViolation", "matrix needs one row per codomain factor");
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != domain.rank()) {
      throw Error("HomomorphismViolation", "matrix needs one column per domain factor");
    }
    for (std::size_t j = 0; j < domain.rank(); ++j) {
      matrix[i][j] = mod(Wide(matrix[i][j]), codomain.modulus(i));
      if (mod(Wide(matrix[i][j]) * domain.modulus(j), codomain.modulus(i)) != 0) {
        throw Error("HomomorphismViolation", "relation of domain factor " + std::to_string(j) +
                                                 " is not sent to zero");
      }
    }
  }
  return AbHom{std::move(domain), std::move(codomain), std::move(matrix)};
}

AbHom AbHom::identity(const FinAbGroup& g) {
  std::vector<std::vector<std::int64_t>> m(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
  for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = 1;
  return make(g, g, std::move(m));
}

AbHom AbHom::zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
  return make(domain, codomain,
              std::vector<std::vector<std::int64_t>>(codomain.rank(), std::vector<std::int64_t>(domain.rank(), 0)));
}

AbElem AbHom::apply(const AbElem& x) const {
  if (x.size() != domain.rank()) throw Error("ShapeMismatch", "element has the wrong number of coordinates");
  AbElem out(codomain.rank());
  for (std::size_t i = 0; i < codomain.rank(); ++i) {
    const std::int64_t n = codomain.modulus(i);
    Wide acc = 0;
    for (std::size_t j = 0; j < domain.rank(); ++j) acc = (acc + Wide(matrix[i][j]) * x[j]) % n;
    out[i] = mod(acc, n);
  }
  return out;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.codomain == g.domain)) throw Error("ShapeMismatch", "homomorphisms are not composable");
  std::vector<std::vector<std::int64_t>> m(g.codomain.rank(), std::vector<std::int64_t>(f.domain.rank(), 0));
  for (std::size_t i = 0; i < g.codomain.rank(); ++i) {
    const std::int64_t n = g.codomain.modulus(i);
    for (std::size_t j = 0; j < f.domain.rank(); ++j) {
      Wide acc = 0;
      for (std::size_t k = 0; k < f.codomain.rank(); ++k) acc = (acc + Wide(g.matrix[i][k]) * f.matrix[k][j]) % n;
      m[i][j] = mod(acc, n);
    }
  }
  return AbHom::make(f.domain, g.codomain, std::move(m));
}

bool is_automorphism(const AbHom& h) { return h.domain == h.codomain && kernel(h).group.rank() == 0; }

Subgroup subgroup(const FinAbGroup& g, const std::vector<AbElem>& gens) {
  const std::size_t r = g.rank();
  const std::size_t s = gens.size();
  if (s == 0) return {FinAbGroup::trivial(), AbHom::zero(FinAbGroup::trivial(), g)};
  // Relations among the generators: first s coordinates of ker [K | diag(m)].
  IntMatrix a(r, s + r);
  for (std::size_t k = 0; k < s; ++k) {
    const AbElem x = g.reduce(gens[k]);
    for (std::size_t i = 0; i < r; ++i) a(i, k) = x[i];
  }
  for (std::size_t i = 0; i < r; ++i) a(i, s + i) = g.modulus(i);
  const auto kernel_basis = integer_kernel(a);
  IntMatrix relations(s, kernel_basis.size());
  for (std::size_t c = 0; c < kernel_basis.size(); ++c) {
    for (std::size_t k = 0; k < s; ++k) relations(k, c) = kernel_basis[c][k];
  }
  const auto presented = abelian_from_presentation(s, relations);
  std::vector<std::vector<std::int64_t>> inclusion(r, std::vector<std::int64_t>(presented.group.rank()));
  for (std::size_t c = 0; c < presented.group.rank(); ++c) {
    std::vector<BigInt> image(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < s; ++k) image[i] += a(i, k) * presented.lifts[c][k];
    }
    const AbElem x = g.reduce(image);
    for (std::size_t i = 0; i < r; ++i) inclusion[i][c] = x[i];
  }
  return {presented.group, AbHom::make(presented.group, g, std::move(inclusion))};
}

namespace {

/// [M | diag(n)] for h : G → H.
IntMatrix augmented(const AbHom& h) {
  const std::size_t k = h.domain.rank();
  const std::size_t l = h.codomain.rank();
  IntMatrix a(l, k + l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = h.matrix[i][j];
    a(i, k + i) = h.codomain.modulus(i);
  }
  return a;
}

}  // namespace

Subgroup kernel(const AbHom& h) {
  const std::size_t k = h.domain.rank();
  std::vector<AbElem> gens;
  if (h.codomain.rank() == 0) {
    for (std::size_t j = 0; j < k; ++j) {
      AbElem e = h.domain.zero();
      e[j] = 1;
      gens.push_back(std::move(e));
    }
  } else {
    for (const auto& z : integer_kernel(augmented(h))) {
      gens.push_back(h.domain.reduce(std::vector<BigInt>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k))));
    }
  }
  return subgroup(h.domain, gens);
}

Subgroup image(const AbHom& h) {
  std::vector<AbElem> gens;
  for (std::size_t j = 0; j < h.domain.rank(); ++j) {
    AbElem column(h.codomain.rank());
    for (std::size_t i = 0; i < h.codomain.rank(); ++i) column[i] = h.matrix[i][j];
    gens.push_back(std::move(column));
  }
  return subgroup(h.codomain, gens);
}

Quotient quotient(const FinAbGroup& g, const std::vector<AbElem>& gens) {
  const std::size_t r = g.rank();
  IntMatrix relations(r, r + gens.size());
  for (std::size_t i = 0; i < r; ++i) relations(i, i) = g.modulus(i);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const AbElem x = g.reduce(gens[k]);
    for (std::size_t i = 0; i < r; ++i) relations(i, r + k) = x[i];
  }
  auto presented = abelian_from_presentation(r, relations);
  Quotient out;
  out.group = presented.group;
  out.projection = AbHom::make(g, presented.group, std::move(presented.projection));
  for (const auto& lift : presented.lifts) out.generator_lifts.push_back(g.reduce(lift));
  return out;
}

std::optional<AbElem> solve(const AbHom& h, const AbElem& target) {
  if (!h.codomain.contains(target)) throw Error("ShapeMismatch", "target is not an element of the codomain");
  if (h.codomain.rank() == 0) return h.domain.zero();
  const auto z = integer_solve(augmented(h), std::vector<BigInt>(target.begin(), target.end()));
  if (!z) return std::nullopt;
  const auto k = static_cast<std::ptrdiff_t>(h.domain.rank());
  return h.domain.reduce(std::vector<BigInt>(z->begin(), z->begin() + k));
}

AbElem coset_minimum(const FinAbGroup& g, const std::vector<AbElem>& gens, const AbElem& x) {
  const std::size_t r = g.rank();
  // Echelon basis of ⟨gens⟩ + ⊕ mᵢℤ, entries kept reduced mod the column modulus.
  std::vector<AbElem> rows;
  for (const auto& v : gens) rows.push_back(g.reduce(v));
  for (std::size_t i = 0; i < r; ++i) {
    AbElem e(r, 0);
    e[i] = g.modulus(i);  // column i is not reduced until it is the pivot column
    rows.push_back(std::move(e));
  }
  auto subtract = [&](AbElem& row, const AbElem& pivot, std::int64_t q, std::size_t col) {
    for (std::size_t c = col; c < r; ++c) {
      Wide v = Wide(row[c]) - Wide(q) * pivot[c];
      row[c] = c == col ? static_cast<std::int64_t>(v) : mod(v, g.modulus(c));
    }
  };
  std::vector<AbElem> basis(r);
  for (std::size_t col = 0; col < r; ++col) {
    for (;;) {
      std::size_t best = rows.size();
      std::size_t nonzero = 0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k][col] == 0) continue;
        ++nonzero;
        if (best == rows.size() || std::abs(rows[k][col]) < std::abs(rows[best][col])) best = k;
      }
      if (nonzero <= 1) {
        if (best < rows.size()) {
          basis[col] = rows[best];
          if (basis[col][col] < 0) {
            for (std::size_t c = col; c < r; ++c) basis[col][c] = c == col ? -basis[col][c] : mod(-Wide(basis[col][c]), g.modulus(c));
          }
          rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        }
        break;
      }
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k == best || rows[k][col] == 0) continue;
        subtract(rows[k], rows[best], rows[k][col] / rows[best][col], col);
      }
    }
  }
  AbElem out = g.reduce(x);
  for (std::size_t col = 0; col < r; ++col) {
    const std::int64_t h = basis[col][col];
    const std::int64_t q = out[col] / h;
    for (std::size_t c = col; c < r; ++c) out[c] = mod(Wide(out[c]) - Wide(q) * basis[col][c], g.modulus(c));
  }
  return out;
}

}  // namespace layercake
