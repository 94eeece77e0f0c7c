#include "layercake/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace layercake {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > SIZE_MAX / base) throw Error("SizeGuard", "cochain table size overflows");
    out *= base;
  }
  return out;
}

void require_same_shape(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) {
    throw Error("DegreeMismatch", "degrees " + std::to_string(a.degree) + " and " + std::to_string(b.degree));
  }
  if (a.normalized != b.normalized || a.values.size() != b.values.size()) {
    throw Error("DegreeMismatch", "cochains use different storage conventions");
  }
}

void check_degree(std::size_t degree, const CohomologyLimits& limits) {
  if (degree > limits.max_degree) {
    throw Error("DegreeOverflow", "degree " + std::to_string(degree) + " exceeds the configured maximum " +
                                      std::to_string(limits.max_degree));
  }
}

}  // namespace

GModule GModule::make(FinGroup group, FinAbGroup coefficients, std::vector<AbHom> action) {
  if (action.size() != group.order()) throw Error("ActionViolation", "need one automorphism per group element");
  for (const auto& h : action) {
    if (!(h.domain == coefficients) || !(h.codomain == coefficients)) {
      throw Error("ActionViolation", "action maps must be endomorphisms of the coefficient group");
    }
  }
  if (!(action[group.identity()] == AbHom::identity(coefficients))) {
    throw Error("ActionViolation", "the identity must act trivially");
  }
  for (Elem g = 0; g < group.order(); ++g) {
    for (Elem h = 0; h < group.order(); ++h) {
      if (!(compose(action[g], action[h]) == action[group.mul(g, h)])) {
        throw Error("ActionViolation", "ρ(" + std::to_string(g) + ")ρ(" + std::to_string(h) + ") != ρ(" +
                                           std::to_string(group.mul(g, h)) + ")");
      }
    }
  }
  return GModule{std::move(group), std::move(coefficients), std::move(action)};
}

GModule GModule::trivial(FinGroup group, FinAbGroup coefficients) {
  std::vector<AbHom> action(group.order(), AbHom::identity(coefficients));
  return make(std::move(group), std::move(coefficients), std::move(action));
}

std::size_t cochain_length(const FinGroup& g, std::size_t degree, bool normalized) {
  return checked_power(normalized ? g.order() - 1 : g.order(), degree);
}

std::vector<Elem> cochain_arguments(const FinGroup& g, std::size_t degree, std::size_t index, bool normalized) {
  const std::size_t base = normalized ? g.order() - 1 : g.order();
  std::vector<Elem> args(degree);
  for (std::size_t k = degree; k > 0; --k) {
    Elem digit = index % base;
    index /= base;
    if (normalized && digit >= g.identity()) ++digit;
    args[k - 1] = digit;
  }
  return args;
}

std::size_t cochain_index(const FinGroup& g, std::span<const Elem> args, bool normalized) {
  const std::size_t base = normalized ? g.order() - 1 : g.order();
  std::size_t index = 0;
  for (Elem a : args) {
    if (normalized && a == g.identity()) throw Error("NormalizationViolation", "identity argument has no slot");
    index = index * base + (normalized && a > g.identity() ? a - 1 : a);
  }
  return index;
}

FinAbGroup cochain_group(const GModule& m, std::size_t degree, bool normalized) {
  return power(m.coefficients, cochain_length(m.group, degree, normalized));
}

Cochain Cochain::zero(const GModule& m, std::size_t degree, bool normalized) {
  return Cochain{degree, normalized,
                 std::vector<AbElem>(cochain_length(m.group, degree, normalized), m.coefficients.zero())};
}

AbElem Cochain::value_at(const GModule& m, std::span<const Elem> args) const {
  if (args.size() != degree) throw Error("DegreeMismatch", "wrong number of arguments");
  if (normalized && std::find(args.begin(), args.end(), m.group.identity()) != args.end()) {
    return m.coefficients.zero();
  }
  return values.at(cochain_index(m.group, args, normalized));
}

void Cochain::set_value(const GModule& m, std::span<const Elem> args, const AbElem& value) {
  if (args.size() != degree) throw Error("DegreeMismatch", "wrong number of arguments");
  values.at(cochain_index(m.group, args, normalized)) = m.coefficients.reduce(value);
}

AbElem flatten(const Cochain& c) {
  AbElem out;
  for (const auto& v : c.values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Cochain unflatten(const GModule& m, std::size_t degree, const AbElem& x, bool normalized) {
  Cochain c = Cochain::zero(m, degree, normalized);
  const std::size_t r = m.coefficients.rank();
  if (x.size() != c.values.size() * r) throw Error("ShapeMismatch", "flattened cochain has the wrong length");
  for (std::size_t t = 0; t < c.values.size(); ++t) {
    for (std::size_t i = 0; i < r; ++i) c.values[t][i] = x[t * r + i];
  }
  return c;
}

Cochain add(const GModule& m, const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  Cochain out = a;
  for (std::size_t t = 0; t < out.values.size(); ++t) out.values[t] = m.coefficients.add(a.values[t], b.values[t]);
  return out;
}

Cochain subtract(const GModule& m, const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  Cochain out = a;
  for (std::size_t t = 0; t < out.values.size(); ++t) {
    out.values[t] = m.coefficients.subtract(a.values[t], b.values[t]);
  }
  return out;
}

Cochain differential(const Cochain& c, const GModule& m, const CohomologyLimits& limits) {
  const std::size_t n = c.degree;
  check_degree(n + 1, limits);
  const FinAbGroup& a = m.coefficients;
  const FinGroup& g = m.group;
  Cochain out = Cochain::zero(m, n + 1, c.normalized);
  std::vector<Elem> inner(n);
  for (std::size_t t = 0; t < out.values.size(); ++t) {
    const auto args = cochain_arguments(g, n + 1, t, c.normalized);
    std::copy(args.begin() + 1, args.end(), inner.begin());
    AbElem acc = m.act(args[0], c.value_at(m, inner));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0, src = 0; k < n; ++k, ++src) {
        if (k == i - 1) {
          inner[k] = g.mul(args[src], args[src + 1]);
          ++src;
        } else {
          inner[k] = args[src];
        }
      }
      const AbElem term = c.value_at(m, inner);
      acc = i % 2 == 0 ? a.add(acc, term) : a.subtract(acc, term);
    }
    std::copy(args.begin(), args.end() - 1, inner.begin());
    const AbElem last = c.value_at(m, inner);
    acc = (n + 1) % 2 == 0 ? a.add(acc, last) : a.subtract(acc, last);
    out.values[t] = std::move(acc);
  }
  return out;
}

AbHom differential_matrix(const GModule& m, std::size_t degree, bool normalized, const CohomologyLimits& limits) {
  check_degree(degree + 1, limits);
  const FinGroup& g = m.group;
  const FinAbGroup& a = m.coefficients;
  const std::size_t r = a.rank();
  const std::size_t in_len = cochain_length(g, degree, normalized);
  const std::size_t out_len = cochain_length(g, degree + 1, normalized);
  if (out_len > limits.size_guard / std::max<std::size_t>(r, 1)) {
    throw Error("SizeGuard", std::to_string(out_len) + " tuples in degree " + std::to_string(degree + 1) +
                                 " exceed the configured guard");
  }
  std::vector<std::vector<std::int64_t>> matrix(out_len * r, std::vector<std::int64_t>(in_len * r, 0));

  // Adds sign·B into the block (out tuple, in tuple); B is r×r.
  auto add_block = [&](std::size_t out_t, std::span<const Elem> in_args, std::int64_t sign,
                       const std::vector<std::vector<std::int64_t>>* block) {
    if (normalized && std::find(in_args.begin(), in_args.end(), g.identity()) != in_args.end()) return;
    const std::size_t in_t = cochain_index(g, in_args, normalized);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t entry = block ? (*block)[i][j] : (i == j ? 1 : 0);
        if (entry == 0) continue;
        auto& cell = matrix[out_t * r + i][in_t * r + j];
        cell = (cell + sign * entry) % a.modulus(i);
      }
    }
  };

  std::vector<Elem> inner(degree);
  for (std::size_t t = 0; t < out_len; ++t) {
    const auto args = cochain_arguments(g, degree + 1, t, normalized);
    std::copy(args.begin() + 1, args.end(), inner.begin());
    add_block(t, inner, 1, &m.action[args[0]].matrix);
    for (std::size_t i = 1; i <= degree; ++i) {
      for (std::size_t k = 0, src = 0; k < degree; ++k, ++src) {
        if (k == i - 1) {
          inner[k] = g.mul(args[src], args[src + 1]);
          ++src;
        } else {
          inner[k] = args[src];
        }
      }
      add_block(t, inner, i % 2 == 0 ? 1 : -1, nullptr);
    }
    std::copy(args.begin(), args.end() - 1, inner.begin());
    add_block(t, inner, (degree + 1) % 2 == 0 ? 1 : -1, nullptr);
  }
  return AbHom::make(cochain_group(m, degree, normalized), cochain_group(m, degree + 1, normalized),
                     std::move(matrix));
}

bool is_cocycle(const Cochain& c, const GModule& m) {
  CohomologyLimits limits;
  limits.max_degree = std::max(limits.max_degree, c.degree + 1);
  const Cochain d = differential(c, m, limits);
  return std::all_of(d.values.begin(), d.values.end(), [&](const AbElem& v) { return m.coefficients.is_zero(v); });
}

std::optional<Cochain> is_coboundary(const Cochain& c, const GModule& m, const CohomologyLimits& limits) {
  if (c.degree == 0) throw Error("DegreeMismatch", "coboundaries start in degree 1");
  const AbHom d = differential_matrix(m, c.degree - 1, c.normalized, limits);
  const auto witness = solve(d, flatten(c));
  if (!witness) return std::nullopt;
  return unflatten(m, c.degree - 1, *witness, c.normalized);
}

bool cohomologous(const Cochain& a, const Cochain& b, const GModule& m, const CohomologyLimits& limits) {
  require_same_shape(a, b);
  return is_coboundary(subtract(m, a, b), m, limits).has_value();
}

AbElem CohomologyResult::class_of(const Cochain& c) const {
  if (c.degree != degree || c.normalized != normalized) throw Error("DegreeMismatch", "cochain has the wrong shape");
  const auto k = solve(cocycles.inclusion, flatten(c));
  if (!k) throw Error("NotACocycle", "cochain is not a cocycle");
  return classes.projection.apply(*k);
}

Cochain CohomologyResult::representative(const AbElem& h) const {
  if (!group.contains(h)) throw Error("ShapeMismatch", "not an element of the cohomology group");
  AbElem k = cocycles.group.zero();
  for (std::size_t i = 0; i < h.size(); ++i) {
    k = cocycles.group.add(k, cocycles.group.scale(h[i], classes.generator_lifts[i]));
  }
  const FinAbGroup& cn = cocycles.inclusion.codomain;
  const AbElem z = coset_minimum(cn, boundaries, cocycles.inclusion.apply(k));
  return unflatten(module, degree, z, normalized);
}

CohomologyResult cohomology(const GModule& m, std::size_t degree, bool normalized, const CohomologyLimits& limits) {
  CohomologyResult out;
  out.module = m;
  out.degree = degree;
  out.normalized = normalized;
  const AbHom d_n = differential_matrix(m, degree, normalized, limits);
  out.cocycles = kernel(d_n);
  if (degree > 0) {
    const AbHom d_prev = differential_matrix(m, degree - 1, normalized, limits);
    for (std::size_t j = 0; j < d_prev.domain.rank(); ++j) {
      AbElem column(d_prev.codomain.rank());
      for (std::size_t i = 0; i < column.size(); ++i) column[i] = d_prev.matrix[i][j];
      out.boundaries.push_back(std::move(column));
    }
  }
  std::vector<AbElem> in_cocycles;
  for (const auto& b : out.boundaries) in_cocycles.push_back(*solve(out.cocycles.inclusion, b));
  out.classes = quotient(out.cocycles.group, in_cocycles);
  out.group = out.classes.group;
  for (std::size_t i = 0; i < out.group.rank(); ++i) {
    AbElem e = out.group.zero();
    e[i] = 1;
    out.representatives.push_back(out.representative(e));
  }
  return out;
}

namespace {

std::map<std::int64_t, std::vector<std::int64_t>> factorize_exponents(std::int64_t n) {
  std::map<std::int64_t, std::vector<std::int64_t>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out[p];
      n /= p;
    }
  }
  if (n > 1) out[n];
  return out;
}

/// Invariant factors of a finite abelian group from the number of elements of each order.
FinAbGroup from_order_statistics(const std::map<std::int64_t, BigInt>& by_order, const BigInt& total) {
  std::int64_t exponent = 1;
  for (const auto& [order, count] : by_order) exponent = std::lcm(exponent, order);
  std::vector<std::vector<std::int64_t>> prime_parts;  // per prime, exponents of cyclic factors
  std::vector<std::int64_t> primes;
  for (auto& [p, unused] : factorize_exponents(exponent)) {
    (void)unused;
    // #{x : p^k x = 0} = p^{s_k}; s_k − s_{k−1} counts factors with exponent ≥ k.
    std::vector<std::int64_t> s{0};
    for (std::int64_t pk = p;; pk *= p) {
      BigInt count = 0;
      for (const auto& [order, c] : by_order) {
        if (pk % order == 0) count += c;
      }
      std::int64_t sk = 0;
      for (BigInt v = count; v > 1; v /= p) ++sk;
      s.push_back(sk);
      if (s.back() == s[s.size() - 2]) break;
    }
    std::vector<std::int64_t> exps;  // one entry per cyclic factor
    for (std::size_t k = 1; k < s.size(); ++k) {
      const std::int64_t at_least_k = s[k] - s[k - 1];
      if (exps.size() < static_cast<std::size_t>(at_least_k)) exps.resize(static_cast<std::size_t>(at_least_k), 0);
      for (std::int64_t i = 0; i < at_least_k; ++i) ++exps[static_cast<std::size_t>(i)];
    }
    primes.push_back(p);
    prime_parts.push_back(std::move(exps));
  }
  std::size_t width = 0;
  for (const auto& e : prime_parts) width = std::max(width, e.size());
  std::vector<std::int64_t> factors(width, 1);
  for (std::size_t q = 0; q < primes.size(); ++q) {
    // Largest exponent goes to the last factor.
    const auto& e = prime_parts[q];
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::int64_t k = 0; k < e[i]; ++k) factors[width - 1 - i] *= primes[q];
    }
  }
  factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());
  FinAbGroup g = FinAbGroup::from_invariant_factors(std::move(factors));
  if (g.order() != total) throw Error("InternalError", "order statistics are inconsistent");
  return g;
}

}  // namespace

BruteForceCohomology brute_force_cohomology(const GModule& m, std::size_t degree, bool normalized,
                                            const CohomologyLimits& limits) {
  check_degree(degree + 1, limits);
  const FinAbGroup cn = cochain_group(m, degree, normalized);
  if (cn.order() > limits.enumeration_bound) {
    throw Error("EnumerationBound", "|C^" + std::to_string(degree) + "| exceeds the enumeration bound");
  }
  std::set<AbElem> boundaries;
  if (degree == 0) {
    boundaries.insert(cn.zero());
  } else {
    const FinAbGroup prev = cochain_group(m, degree - 1, normalized);
    for (const auto& b : prev.elements(limits.enumeration_bound)) {
      boundaries.insert(flatten(differential(unflatten(m, degree - 1, b, normalized), m, limits)));
    }
  }
  BruteForceCohomology out;
  out.coboundary_count = boundaries.size();
  std::map<std::int64_t, BigInt> cocycles_by_class_order;
  for (const auto& x : cn.elements(limits.enumeration_bound)) {
    const Cochain c = unflatten(m, degree, x, normalized);
    const Cochain dc = differential(c, m, limits);
    if (!std::all_of(dc.values.begin(), dc.values.end(), [&](const AbElem& v) { return m.coefficients.is_zero(v); })) {
      continue;
    }
    out.cocycle_count += 1;
    std::int64_t order = 1;
    for (AbElem y = x; !boundaries.count(y); y = cn.add(y, x)) ++order;
    cocycles_by_class_order[order] += 1;
  }
  out.class_count = out.cocycle_count / out.coboundary_count;
  for (const auto& [order, count] : cocycles_by_class_order) out.classes_by_order[order] = count / out.coboundary_count;
  out.group = from_order_statistics(out.classes_by_order, out.class_count);
  return out;
}

}  // namespace layercake

namespace layercake {

AbelianCoordinates abelian_coordinates(const FinGroup& g) {
  if (!g.is_abelian()) throw Error("NotAbelian", "group of order " + std::to_string(g.order()) + " is not abelian");
  const auto gens = g.generators();
  const std::size_t k = gens.size();
  // Word coordinates c(x) ∈ ℤᵏ from a breadth-first walk.
  std::vector<std::vector<BigInt>> word(g.order());
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> queue{g.identity()};
  word[g.identity()] = std::vector<BigInt>(k, 0);
  seen[g.identity()] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    for (std::size_t i = 0; i < k; ++i) {
      const Elem y = g.mul(x, gens[i]);
      if (seen[y]) continue;
      seen[y] = true;
      word[y] = word[x];
      word[y][i] += 1;
      queue.push_back(y);
    }
  }
  IntMatrix relations(k, g.order() * k);
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto& target = word[g.mul(x, gens[i])];
      for (std::size_t r = 0; r < k; ++r) relations(r, x * k + i) = word[x][r] + (r == i ? 1 : 0) - target[r];
    }
  }
  const auto presented = abelian_from_presentation(k, relations);
  AbelianCoordinates out;
  out.group = presented.group;
  for (Elem x = 0; x < g.order(); ++x) {
    AbElem c(presented.group.rank());
    for (std::size_t i = 0; i < c.size(); ++i) {
      BigInt acc = 0;
      for (std::size_t r = 0; r < k; ++r) acc += BigInt(presented.projection[i][r]) * word[x][r];
      c[i] = static_cast<std::int64_t>(((acc % presented.group.modulus(i)) + presented.group.modulus(i)) %
                                       presented.group.modulus(i));
    }
    out.element_of.emplace(c, x);
    out.of_element.push_back(std::move(c));
  }
  if (out.element_of.size() != g.order()) throw Error("InternalError", "abelian coordinates are not injective");
  return out;
}

}  // namespace layercake
