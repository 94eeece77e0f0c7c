#include "layercake/schreier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace layercake {

namespace {

std::string tuple_label(std::initializer_list<Elem> xs) {
  std::string s = "(";
  bool first = true;
  for (Elem x : xs) {
    s += (first ? "" : ", ") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

/// i⁻¹ on image(i).
std::vector<Elem> invert_inclusion(const Extension& ext) {
  std::vector<Elem> inv(ext.e.order(), ext.f.order());
  for (Elem x = 0; x < ext.f.order(); ++x) inv[ext.i(x)] = x;
  return inv;
}

}  // namespace

Extension Extension::make(FinGroup f, FinGroup e, FinGroup b, std::vector<Elem> i, std::vector<Elem> p) {
  GroupHom inc = GroupHom::make(f, e, std::move(i));
  GroupHom proj = GroupHom::make(e, b, std::move(p));
  if (!inc.injective()) throw Error("ExactnessViolation", "i is not injective");
  if (!proj.surjective()) throw Error("ExactnessViolation", "p is not surjective");
  if (inc.image() != proj.kernel()) throw Error("ExactnessViolation", "image of i differs from kernel of p");
  if (e.order() != f.order() * b.order()) throw Error("ExactnessViolation", "|E| != |F|·|B|");
  return Extension{std::move(f), std::move(e), std::move(b), std::move(inc), std::move(proj)};
}

std::vector<std::vector<Elem>> normal_subgroups(const FinGroup& g) {
  std::set<std::vector<Elem>> subgroups{{g.identity()}};
  std::vector<std::vector<Elem>> frontier{{g.identity()}};
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& s : frontier) {
      for (Elem x = 0; x < g.order(); ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        auto gens = s;
        gens.push_back(x);
        auto closed = g.closure(gens);
        if (subgroups.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Elem>> out;
  for (const auto& s : subgroups) {
    bool normal = true;
    for (Elem x = 0; x < g.order() && normal; ++x) {
      for (Elem n : s) {
        if (!std::binary_search(s.begin(), s.end(), g.mul(g.mul(x, n), g.inverse(x)))) {
          normal = false;
          break;
        }
      }
    }
    if (normal) out.push_back(s);
  }
  return out;
}

Extension extension_from_normal_subgroup(const FinGroup& e, const std::vector<Elem>& normal) {
  std::vector<Elem> n = normal;
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  if (n.empty() || e.closure(n) != n) throw Error("NotNormal", "not a subgroup");
  for (Elem x = 0; x < e.order(); ++x) {
    for (Elem y : n) {
      if (!std::binary_search(n.begin(), n.end(), e.mul(e.mul(x, y), e.inverse(x)))) {
        throw Error("NotNormal", "not closed under conjugation by " + std::to_string(x));
      }
    }
  }
  std::vector<Elem> coset(e.order(), e.order());
  std::vector<Elem> reps;
  for (Elem x = 0; x < e.order(); ++x) {
    if (coset[x] != e.order()) continue;
    for (Elem y : n) coset[e.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::vector<Elem>> b_table(reps.size(), std::vector<Elem>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) b_table[i][j] = coset[e.mul(reps[i], reps[j])];
  }
  std::vector<std::vector<Elem>> f_table(n.size(), std::vector<Elem>(n.size()));
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) {
      f_table[i][j] = static_cast<Elem>(std::lower_bound(n.begin(), n.end(), e.mul(n[i], n[j])) - n.begin());
    }
  }
  return Extension::make(FinGroup::from_table(std::move(f_table)), e, FinGroup::from_table(std::move(b_table)), n,
                         coset);
}

SetSection choose_section(const Extension& ext) {
  std::vector<Elem> s(ext.b.order(), ext.e.order());
  for (Elem x = 0; x < ext.e.order(); ++x) {
    if (s[ext.p(x)] == ext.e.order()) s[ext.p(x)] = x;
  }
  s[ext.b.identity()] = ext.e.identity();
  return SetSection{std::move(s)};
}

std::vector<SetSection> all_normalized_sections(const Extension& ext, std::size_t limit) {
  std::vector<std::vector<Elem>> fibers(ext.b.order());
  for (Elem x = 0; x < ext.e.order(); ++x) fibers[ext.p(x)].push_back(x);
  fibers[ext.b.identity()] = {ext.e.identity()};
  std::vector<SetSection> out;
  std::vector<Elem> s(ext.b.order());
  std::function<void(Elem)> assign = [&](Elem b) {
    if (b == ext.b.order()) {
      if (out.size() >= limit) throw Error("EnumerationBound", "more than " + std::to_string(limit) + " sections");
      out.push_back(SetSection{s});
      return;
    }
    for (Elem x : fibers[b]) {
      s[b] = x;
      assign(b + 1);
    }
  };
  assign(0);
  return out;
}

NonabelianCocycle extract_cocycle(const Extension& ext, const SetSection& s, bool allow_unnormalized) {
  const FinGroup& e = ext.e;
  if (s.map.size() != ext.b.order()) throw Error("SectionViolation", "section has the wrong size");
  for (Elem b = 0; b < ext.b.order(); ++b) {
    if (s.map[b] >= e.order() || ext.p(s.map[b]) != b) {
      throw Error("SectionViolation", "p(s(" + std::to_string(b) + ")) != " + std::to_string(b));
    }
  }
  if (!allow_unnormalized && s.map[ext.b.identity()] != e.identity()) {
    throw Error("SectionViolation", "section does not send the identity to the identity");
  }
  const auto inv = invert_inclusion(ext);
  NonabelianCocycle c{ext.b, ext.f, {}, {}};
  for (Elem b = 0; b < ext.b.order(); ++b) {
    std::vector<Elem> phi(ext.f.order());
    for (Elem x = 0; x < ext.f.order(); ++x) {
      phi[x] = inv[e.mul(e.mul(s.map[b], ext.i(x)), e.inverse(s.map[b]))];
    }
    c.phi.push_back(std::move(phi));
  }
  for (Elem b1 = 0; b1 < ext.b.order(); ++b1) {
    for (Elem b2 = 0; b2 < ext.b.order(); ++b2) {
      const Elem prod = e.mul(s.map[b1], s.map[b2]);
      c.factor.push_back(inv[e.mul(s.map[ext.b.mul(b1, b2)], e.inverse(prod))]);
    }
  }
  return c;
}

CocycleVerdict check_cocycle_conditions(const NonabelianCocycle& c) {
  const FinGroup& b = c.b;
  const FinGroup& f = c.f;
  const Elem eb = b.identity();
  const Elem ef = f.identity();
  if (c.phi.size() != b.order() || c.factor.size() != b.order() * b.order()) {
    return {false, "normalization", {}};
  }
  for (Elem x : c.factor) {
    if (x >= f.order()) return {false, "normalization", {x}};
  }
  for (const auto& phi : c.phi) {
    if (phi.size() != f.order()) return {false, "automorphism", {}};
  }
  for (Elem x = 0; x < f.order(); ++x) {
    if (c.phi[eb][x] != x) return {false, "normalization", {eb, x}};
  }
  for (Elem y = 0; y < b.order(); ++y) {
    if (c.factor_at(eb, y) != ef) return {false, "normalization", {eb, y}};
    if (c.factor_at(y, eb) != ef) return {false, "normalization", {y, eb}};
  }
  for (Elem y = 0; y < b.order(); ++y) {
    if (!is_homomorphism(f, f, c.phi[y]) || GroupHom{f, f, c.phi[y]}.image().size() != f.order()) {
      return {false, "automorphism", {y}};
    }
  }
  for (Elem b1 = 0; b1 < b.order(); ++b1) {
    for (Elem b2 = 0; b2 < b.order(); ++b2) {
      const Elem k = c.factor_at(b1, b2);
      for (Elem x = 0; x < f.order(); ++x) {
        const Elem lhs = f.mul(f.mul(k, c.phi[b1][c.phi[b2][x]]), f.inverse(k));
        if (lhs != c.phi[b.mul(b1, b2)][x]) return {false, "conjugation", {b1, b2, x}};
      }
    }
  }
  for (Elem b1 = 0; b1 < b.order(); ++b1) {
    for (Elem b2 = 0; b2 < b.order(); ++b2) {
      for (Elem b3 = 0; b3 < b.order(); ++b3) {
        const Elem lhs = f.mul(c.factor_at(b.mul(b1, b2), b3), c.factor_at(b1, b2));
        const Elem rhs = f.mul(c.factor_at(b1, b.mul(b2, b3)), c.phi[b1][c.factor_at(b2, b3)]);
        if (lhs != rhs) return {false, "associativity", {b1, b2, b3}};
      }
    }
  }
  return {true, "", {}};
}

Extension build_extension(const NonabelianCocycle& c) {
  const FinGroup& b = c.b;
  const FinGroup& f = c.f;
  const std::size_t nb = b.order();
  const std::size_t n = f.order() * nb;
  if (c.phi.size() != nb || c.factor.size() != nb * nb) throw Error("CocycleInvalid", "cocycle has the wrong shape");
  for (const auto& phi : c.phi) {
    if (phi.size() != f.order()) throw Error("CocycleInvalid", "cocycle has the wrong shape");
    for (Elem x : phi) {
      if (x >= f.order()) throw Error("CocycleInvalid", "phi leaves F");
    }
  }
  for (Elem x : c.factor) {
    if (x >= f.order()) throw Error("CocycleInvalid", "factor leaves F");
  }
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      const Elem x1 = u / nb, b1 = u % nb, x2 = v / nb, b2 = v % nb;
      const Elem x = f.mul(f.mul(x1, c.phi[b1][x2]), f.inverse(c.factor_at(b1, b2)));
      table[u][v] = x * nb + b.mul(b1, b2);
    }
  }
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      for (Elem w = 0; w < n; ++w) {
        if (table[table[u][v]][w] != table[u][table[v][w]]) {
          throw Error("CocycleInvalid", "crossed product is not associative at " + tuple_label({u, v, w}));
        }
      }
    }
  }
  const auto verdict = check_cocycle_conditions(c);
  if (!verdict.holds) throw Error("CocycleInvalid", verdict.law + " law fails");
  FinGroup e = FinGroup::from_table(std::move(table));
  std::vector<Elem> i(f.order());
  for (Elem x = 0; x < f.order(); ++x) i[x] = x * nb + b.identity();
  std::vector<Elem> p(n);
  for (Elem u = 0; u < n; ++u) p[u] = u % nb;
  return Extension::make(f, std::move(e), b, std::move(i), std::move(p));
}

std::optional<std::vector<Elem>> extension_equivalence(const Extension& a, const Extension& b,
                                                       std::size_t candidate_limit) {
  if (!(a.f == b.f) || !(a.b == b.b) || a.e.order() != b.e.order()) return std::nullopt;
  const SetSection s = choose_section(a);
  const auto inv = invert_inclusion(a);
  // Every u ∈ E₁ is i₁(x)·s(p₁(u)); θ(u) = i₂(x)·t(p₁(u)).
  std::vector<Elem> x_of(a.e.order());
  for (Elem u = 0; u < a.e.order(); ++u) {
    x_of[u] = inv[a.e.mul(u, a.e.inverse(s.map[a.p(u)]))];
  }
  std::vector<std::vector<Elem>> fibers(a.b.order());
  for (Elem v = 0; v < b.e.order(); ++v) fibers[b.p(v)].push_back(v);
  fibers[a.b.identity()] = {b.e.identity()};
  std::vector<Elem> t(a.b.order());
  std::optional<std::vector<Elem>> found;
  std::size_t nodes = 0;
  std::function<void(Elem)> assign = [&](Elem y) {
    if (found) return;
    if (y == a.b.order()) {
      std::vector<Elem> theta(a.e.order());
      for (Elem u = 0; u < a.e.order(); ++u) theta[u] = b.e.mul(b.i(x_of[u]), t[a.p(u)]);
      if (is_homomorphism(a.e, b.e, theta)) found = std::move(theta);
      return;
    }
    for (Elem v : fibers[y]) {
      if (++nodes > candidate_limit) {
        throw Error("BudgetExceeded", "equivalence search exceeded " + std::to_string(candidate_limit) + " candidates");
      }
      t[y] = v;
      assign(y + 1);
    }
  };
  assign(0);
  return found;
}

bool extensions_equivalent(const Extension& a, const Extension& b, std::size_t candidate_limit) {
  return extension_equivalence(a, b, candidate_limit).has_value();
}

Aut2Group build_aut2group(const FinGroup& f, std::size_t candidate_limit) {
  Aut2Group out{f, automorphisms(f, candidate_limit), {}};
  const std::size_t k = out.automorphisms.size();
  out.two_cells.assign(k, std::vector<std::vector<Elem>>(k));
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      for (Elem g = 0; g < f.order(); ++g) {
        bool ok = true;
        for (Elem x = 0; x < f.order() && ok; ++x) {
          ok = f.mul(f.mul(g, out.automorphisms[s][x]), f.inverse(g)) == out.automorphisms[t][x];
        }
        if (ok) out.two_cells[s][t].push_back(g);
      }
    }
  }
  return out;
}

AbelianCocycle to_abelian_cocycle(const NonabelianCocycle& c) {
  const FinGroup& b = c.b;
  const FinGroup& f = c.f;
  auto coords = abelian_coordinates(f);
  for (Elem b1 = 0; b1 < b.order(); ++b1) {
    for (Elem b2 = 0; b2 < b.order(); ++b2) {
      for (Elem x = 0; x < f.order(); ++x) {
        if (c.phi[b1][c.phi[b2][x]] != c.phi[b.mul(b1, b2)][x]) {
          throw Error("ActionNotHomomorphic", "phi(" + std::to_string(b1) + ")phi(" + std::to_string(b2) +
                                                  ") != phi(" + std::to_string(b.mul(b1, b2)) + ")");
        }
      }
    }
  }
  const FinAbGroup& a = coords.group;
  std::vector<AbHom> action;
  for (Elem y = 0; y < b.order(); ++y) {
    std::vector<std::vector<std::int64_t>> matrix(a.rank(), std::vector<std::int64_t>(a.rank()));
    for (std::size_t j = 0; j < a.rank(); ++j) {
      AbElem basis = a.zero();
      basis[j] = 1;
      const AbElem image = coords.of_element[c.phi[y][coords.element_of.at(basis)]];
      for (std::size_t i = 0; i < a.rank(); ++i) matrix[i][j] = image[i];
    }
    action.push_back(AbHom::make(a, a, std::move(matrix)));
  }
  GModule module = GModule::make(b, a, std::move(action));
  Cochain cochain = Cochain::zero(module, 2);
  for (std::size_t t = 0; t < cochain.values.size(); ++t) {
    const auto args = cochain_arguments(b, 2, t);
    cochain.values[t] = coords.of_element[c.factor_at(args[0], args[1])];
  }
  return AbelianCocycle{std::move(module), std::move(cochain), std::move(coords)};
}

CentralExtensionCount classify_central_extensions(const FinGroup& b, const FinGroup& f,
                                                  std::size_t enumeration_limit) {
  const auto coords = abelian_coordinates(f);
  const GModule module = GModule::trivial(b, coords.group);
  CohomologyLimits limits;
  limits.enumeration_bound = enumeration_limit;

  CentralExtensionCount out;
  out.by_cohomology = static_cast<std::size_t>(cohomology(module, 2, true, limits).group.order());
  out.by_cochains = static_cast<std::size_t>(brute_force_cohomology(module, 2, true, limits).class_count);

  // Every normalized factor set with trivial phi; keep those that are cocycles.
  const auto non_identity = b.non_identity();
  const std::size_t slots = non_identity.size() * non_identity.size();
  BigInt total = 1;
  for (std::size_t k = 0; k < slots; ++k) total *= f.order();
  if (total > enumeration_limit) throw Error("EnumerationBound", "too many factor sets to enumerate");

  std::vector<Elem> identity_map(f.order());
  for (Elem x = 0; x < f.order(); ++x) identity_map[x] = x;
  NonabelianCocycle c{b, f, std::vector<std::vector<Elem>>(b.order(), identity_map),
                      std::vector<Elem>(b.order() * b.order(), f.identity())};
  std::vector<Elem> digits(slots, 0);
  for (;;) {
    for (std::size_t k = 0; k < slots; ++k) {
      const Elem b1 = non_identity[k / non_identity.size()];
      const Elem b2 = non_identity[k % non_identity.size()];
      c.factor[b1 * b.order() + b2] = digits[k];
    }
    if (check_cocycle_conditions(c).holds) {
      Extension ext = build_extension(c);
      const bool known = std::any_of(out.representatives.begin(), out.representatives.end(),
                                     [&](const Extension& r) { return extensions_equivalent(r, ext); });
      if (!known) out.representatives.push_back(std::move(ext));
    }
    std::size_t k = slots;
    bool carry = true;
    while (carry && k > 0) {
      --k;
      if (++digits[k] < f.order()) {
        carry = false;
      } else {
        digits[k] = 0;
      }
    }
    if (carry) break;
  }
  out.by_extensions = out.representatives.size();
  return out;
}

}  // namespace layercake
