#include "layercake/group.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace layercake {

FinGroup FinGroup::from_table(std::vector<std::vector<Elem>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("GroupViolation", "a group has at least one element");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("GroupViolation", "multiplication table is not square");
    for (Elem x : row) {
      if (x >= n) throw Error("GroupViolation", "table entry out of range");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error("GroupViolation", "associativity fails at (" + std::to_string(a) + ", " +
                                            std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error("GroupViolation", "no identity element");
  std::vector<Elem> inverse(n, n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (table[a][b] == *identity && table[b][a] == *identity) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] == n) throw Error("GroupViolation", "element " + std::to_string(a) + " has no inverse");
  }
  FinGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.identity_ = *identity;
  return g;
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error("GroupViolation", "cyclic group of order 0");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(std::move(t));
}

FinGroup FinGroup::dihedral(std::size_t n) {
  if (n == 0) throw Error("GroupViolation", "dihedral group of order 0");
  std::vector<std::vector<Elem>> t(2 * n, std::vector<Elem>(2 * n));
  for (Elem x = 0; x < 2 * n; ++x) {
    for (Elem y = 0; y < 2 * n; ++y) {
      const bool xs = x >= n;
      const bool ys = y >= n;
      const std::size_t a = x % n;
      const std::size_t b = y % n;
      // r^a s = s r^{-a}
      if (!xs && !ys) t[x][y] = (a + b) % n;
      if (!xs && ys) t[x][y] = n + (b + n - a) % n;
      if (xs && !ys) t[x][y] = n + (a + b) % n;
      if (xs && ys) t[x][y] = (b + n - a) % n;
    }
  }
  return from_table(std::move(t));
}

FinGroup FinGroup::quaternion() {
  // Element 2u + s is (-1)^s times unit u, units ordered 1, i, j, k.
  struct Signed {
    std::size_t unit;
    std::size_t sign;
  };
  const Signed units[4][4] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      const Signed p = units[x / 2][y / 2];
      t[x][y] = 2 * p.unit + ((p.sign + x % 2 + y % 2) % 2);
    }
  }
  return from_table(std::move(t));
}

FinGroup FinGroup::symmetric3() { return dihedral(3); }

FinGroup FinGroup::direct_product(const FinGroup& g, const FinGroup& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) t[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  }
  return from_table(std::move(t));
}

std::size_t FinGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FinGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a) {
    for (Elem b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<Elem> FinGroup::non_identity() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < order(); ++a) {
    if (a != identity_) out.push_back(a);
  }
  return out;
}

std::vector<Elem> FinGroup::closure(const std::vector<Elem>& gens) const {
  std::vector<bool> seen(order(), false);
  std::deque<Elem> queue{identity_};
  seen[identity_] = true;
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      const Elem y = mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < order(); ++a) {
    if (seen[a]) out.push_back(a);
  }
  return out;
}

std::vector<Elem> FinGroup::generators() const {
  std::vector<Elem> gens;
  std::vector<Elem> span{identity_};
  for (Elem a = 0; a < order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = closure(gens);
  }
  return gens;
}

bool is_homomorphism(const FinGroup& g, const FinGroup& h, const std::vector<Elem>& map) {
  if (map.size() != g.order()) return false;
  for (Elem x : map) {
    if (x >= h.order()) return false;
  }
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

GroupHom GroupHom::make(FinGroup domain, FinGroup codomain, std::vector<Elem> map) {
  if (!is_homomorphism(domain, codomain, map)) {
    throw Error("HomomorphismViolation", "map is not a group homomorphism");
  }
  return GroupHom{std::move(domain), std::move(codomain), std::move(map)};
}

bool GroupHom::injective() const { return kernel().size() == 1; }

bool GroupHom::surjective() const { return image().size() == codomain.order(); }

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < domain.order(); ++a) {
    if (map[a] == codomain.identity()) out.push_back(a);
  }
  return out;
}

std::vector<Elem> GroupHom::image() const {
  std::vector<Elem> out(map.begin(), map.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t for_each_isomorphism(const FinGroup& g, const FinGroup& h,
                                 const std::function<bool(const std::vector<Elem>&)>& visit,
                                 std::size_t candidate_limit) {
  if (g.order() != h.order()) return 0;
  const std::vector<Elem> gens = g.generators();
  std::vector<Elem> images(gens.size());
  std::size_t nodes = 0;
  bool stopped = false;

  auto extend = [&]() -> std::optional<std::vector<Elem>> {
    std::vector<Elem> map(g.order(), h.order());
    map[g.identity()] = h.identity();
    std::deque<Elem> queue{g.identity()};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = g.mul(x, gens[i]);
        const Elem image = h.mul(map[x], images[i]);
        if (map[y] == h.order()) {
          map[y] = image;
          queue.push_back(y);
        } else if (map[y] != image) {
          return std::nullopt;
        }
      }
    }
    std::vector<bool> hit(h.order(), false);
    for (Elem x : map) {
      if (hit[x]) return std::nullopt;
      hit[x] = true;
    }
    if (!is_homomorphism(g, h, map)) return std::nullopt;
    return map;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (stopped) return;
    if (i == gens.size()) {
      if (auto map = extend(); map && !visit(*map)) stopped = true;
      return;
    }
    const std::size_t order = g.element_order(gens[i]);
    for (Elem y = 0; y < h.order() && !stopped; ++y) {
      if (h.element_order(y) != order) continue;
      if (++nodes > candidate_limit) {
        throw Error("BudgetExceeded", "isomorphism search exceeded " + std::to_string(candidate_limit) + " candidates");
      }
      images[i] = y;
      assign(i + 1);
    }
  };
  assign(0);
  return nodes;
}

std::vector<std::vector<Elem>> automorphisms(const FinGroup& g, std::size_t candidate_limit) {
  std::vector<std::vector<Elem>> out;
  for_each_isomorphism(
      g, g,
      [&](const std::vector<Elem>& map) {
        out.push_back(map);
        return true;
      },
      candidate_limit);
  std::sort(out.begin(), out.end());
  return out;
}

bool groups_isomorphic(const FinGroup& g, const FinGroup& h, std::size_t candidate_limit) {
  bool found = false;
  for_each_isomorphism(
      g, h,
      [&](const std::vector<Elem>&) {
        found = true;
        return false;
      },
      candidate_limit);
  return found;
}

}  // namespace layercake
