#include "layercake/pointed.hpp"

#include <map>
#include <set>
#include <string>

#include "layercake/catalog.hpp"
#include "layercake/error.hpp"

namespace layercake {

Monoid Monoid::from_table(std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("MonoidViolation", "a monoid needs at least one element");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error("MonoidViolation", "row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw Error("MonoidViolation", "product " + std::to_string(a) + "*" + std::to_string(b) + " is out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error("MonoidViolation", "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ")");
        }
      }
    }
  }
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) unit = e;
  }
  if (!unit) throw Error("MonoidViolation", "no two-sided identity");
  Monoid m;
  m.table_ = std::move(table);
  m.identity_ = *unit;
  return m;
}

bool Monoid::is_group() const {
  for (std::size_t a = 0; a < order(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order() && !found; ++b) found = mul(a, b) == identity_ && mul(b, a) == identity_;
    if (!found) return false;
  }
  return true;
}

PointedCategory PointedCategory::make(CategoryPtr category, Obj basepoint) {
  if (basepoint >= category->num_objects()) {
    throw Error("UnknownObject", "basepoint " + std::to_string(basepoint) + " is not an object");
  }
  return {std::move(category), basepoint};
}

PointedFunctor PointedFunctor::make(PointedCategory domain, PointedCategory codomain, FinFunctor functor,
                                    Mor pointing) {
  if (!same_category(functor.domain_ptr(), domain.category) ||
      !same_category(functor.codomain_ptr(), codomain.category)) {
    throw Error("PointingViolation", "functor does not run between the pointed categories");
  }
  const FinCategory& d = *codomain.category;
  if (pointing >= d.num_morphisms()) throw Error("PointingViolation", "pointing is not a morphism");
  if (d.src(pointing) != functor.on_object(domain.basepoint) || d.tgt(pointing) != codomain.basepoint) {
    throw Error("PointingViolation", "pointing must run from the image of the basepoint to the basepoint");
  }
  if (!is_isomorphism(d, pointing)) throw Error("PointingViolation", "pointing is not an isomorphism");
  return {std::move(domain), std::move(codomain), std::move(functor), pointing};
}

bool PointedFunctor::is_strict() const {
  return functor.on_object(domain.basepoint) == codomain.basepoint &&
         codomain.category->is_identity(pointing);
}

PointedCategory deloop(const Monoid& m) {
  std::vector<MorphismSpec> morphisms;
  for (std::size_t a = 0; a < m.order(); ++a) {
    morphisms.push_back({a == m.identity() ? "e" : "m" + std::to_string(a), 0, 0});
  }
  auto c = share(FinCategory::from_rule({"*"}, std::move(morphisms), {m.identity()},
                                        [&](Mor g, Mor f) { return m.mul(g, f); }));
  return {c, 0};
}

Monoid loop(const PointedCategory& p) {
  const FinCategory& c = *p.category;
  auto hom = hom_set(c, p.basepoint, p.basepoint);
  std::map<Mor, std::size_t> position;
  for (std::size_t i = 0; i < hom.size(); ++i) position[hom[i]] = i;
  std::vector<std::vector<std::size_t>> table(hom.size(), std::vector<std::size_t>(hom.size()));
  for (std::size_t i = 0; i < hom.size(); ++i) {
    for (std::size_t j = 0; j < hom.size(); ++j) table[i][j] = position.at(c.compose(hom[i], hom[j]));
  }
  return Monoid::from_table(std::move(table));
}

PointedFunctor deloop(const Monoid& a, const Monoid& b, const std::vector<std::size_t>& h) {
  if (h.size() != a.order()) throw Error("HomomorphismViolation", "map has the wrong length");
  for (std::size_t x : h) {
    if (x >= b.order()) throw Error("HomomorphismViolation", "image out of range");
  }
  if (h[a.identity()] != b.identity()) throw Error("HomomorphismViolation", "identity is not preserved");
  for (std::size_t x = 0; x < a.order(); ++x) {
    for (std::size_t y = 0; y < a.order(); ++y) {
      if (h[a.mul(x, y)] != b.mul(h[x], h[y])) {
        throw Error("HomomorphismViolation",
                    "products are not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  PointedCategory da = deloop(a);
  PointedCategory db = deloop(b);
  auto f = FinFunctor::make(da.category, db.category, {0}, h);
  return PointedFunctor::make(da, db, f, b.identity());
}

Strictification strictify_pointed(const PointedFunctor& pf) {
  const FinCategory& c = *pf.domain.category;
  const FinCategory& d = *pf.codomain.category;
  const FinFunctor& f = pf.functor;
  const Obj star = pf.domain.basepoint;
  const Obj star2 = pf.codomain.basepoint;

  std::vector<Obj> objects(c.num_objects());
  std::vector<Mor> psi(c.num_objects()), psi_inv(c.num_objects());
  for (Obj x = 0; x < c.num_objects(); ++x) {
    if (x == star) {
      objects[x] = star2;
      psi[x] = pf.pointing;
      psi_inv[x] = *inverse_of(d, pf.pointing);
    } else {
      objects[x] = f.on_object(x);
      psi[x] = psi_inv[x] = d.identity(f.on_object(x));
    }
  }
  std::vector<Mor> morphisms(c.num_morphisms());
  for (Mor h = 0; h < c.num_morphisms(); ++h) {
    morphisms[h] = d.compose(psi[c.tgt(h)], d.compose(f.on_morphism(h), psi_inv[c.src(h)]));
  }
  auto strict = FinFunctor::make(pf.domain.category, pf.codomain.category, std::move(objects), std::move(morphisms));
  auto theta = NatTransformation::make(f, strict, psi);
  return {PointedFunctor::make(pf.domain, pf.codomain, strict, d.identity(star2)), theta};
}

namespace {

// Every functor s → c extends along i : s → t.
bool lifts_along(const FinFunctor& i, const CategoryPtr& c) {
  std::set<std::pair<std::vector<Obj>, std::vector<Mor>>> restrictions;
  for_each_functor(i.codomain_ptr(), c, [&](const FinFunctor& g) {
    auto r = compose(g, i);
    restrictions.insert({{r.object_map().begin(), r.object_map().end()},
                         {r.morphism_map().begin(), r.morphism_map().end()}});
    return true;
  });
  bool all = true;
  for_each_functor(i.domain_ptr(), c, [&](const FinFunctor& g) {
    all = restrictions.contains({{g.object_map().begin(), g.object_map().end()},
                                 {g.morphism_map().begin(), g.morphism_map().end()}});
    return all;
  });
  return all;
}

FinFunctor probe(int j) {
  using namespace catalog;
  switch (j) {
    case -1:
      return FinFunctor::make(empty_category(), terminal_category(), {}, {});
    case 0: {
      auto s = discrete_category(2);
      auto t = codiscrete_category(2);
      return FinFunctor::make(s, t, {0, 1}, {t->identity(0), t->identity(1)});
    }
    default: {
      auto s = parallel_pair();
      auto t = chain_category(2);
      Mor arrow = t->hom(0, 1)[0];
      return FinFunctor::make(s, t, {0, 1}, {t->identity(0), t->identity(1), arrow, arrow});
    }
  }
}

}  // namespace

bool has_no_j_homotopy(const FinCategory& c, int j) {
  if (j < -1 || j > 1) throw Error("InvalidLevel", "j must lie in {-1, 0, 1}, got " + std::to_string(j));
  return lifts_along(probe(j), std::make_shared<const FinCategory>(c));
}

bool k_connected(const FinCategory& c, int k) {
  if (k < -2 || k > 1) throw Error("InvalidLevel", "k must lie in {-2, -1, 0, 1}, got " + std::to_string(k));
  for (int j = -1; j <= k; ++j) {
    if (!has_no_j_homotopy(c, j)) return false;
  }
  return true;
}

std::size_t TruncatedSimplicialSet::nondegenerate_count(std::size_t n, const FinCategory& c) const {
  std::size_t count = 0;
  for (const auto& s : simplices[n]) {
    bool degenerate = false;
    for (Mor f : s.arrows) degenerate = degenerate || c.is_identity(f);
    if (!degenerate) ++count;
  }
  return count;
}

namespace {

Obj vertex(const FinCategory& c, const Simplex& s, std::size_t i) {
  return i == 0 ? s.start : c.tgt(s.arrows[i - 1]);
}

Simplex face(const FinCategory& c, const Simplex& s, std::size_t i) {
  const std::size_t n = s.arrows.size();
  Simplex out;
  if (i == 0) {
    out.start = vertex(c, s, 1);
    out.arrows.assign(s.arrows.begin() + 1, s.arrows.end());
  } else if (i == n) {
    out.start = s.start;
    out.arrows.assign(s.arrows.begin(), s.arrows.end() - 1);
  } else {
    out.start = s.start;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i - 1) {
        out.arrows.push_back(c.compose(s.arrows[i], s.arrows[i - 1]));
        ++k;
      } else {
        out.arrows.push_back(s.arrows[k]);
      }
    }
  }
  return out;
}

Simplex degeneracy(const FinCategory& c, const Simplex& s, std::size_t i) {
  Simplex out = s;
  out.arrows.insert(out.arrows.begin() + static_cast<std::ptrdiff_t>(i), c.identity(vertex(c, s, i)));
  return out;
}

}  // namespace

TruncatedSimplicialSet nerve(const FinCategory& c, std::size_t max_dimension, std::size_t dimension_bound,
                             std::size_t simplex_bound) {
  if (max_dimension > dimension_bound) {
    throw Error("DimensionBound", "dimension " + std::to_string(max_dimension) + " exceeds the bound " +
                                      std::to_string(dimension_bound));
  }
  TruncatedSimplicialSet out;
  out.max_dimension = max_dimension;
  out.simplices.resize(max_dimension + 1);
  std::size_t total = 0;
  for (Obj x = 0; x < c.num_objects(); ++x) out.simplices[0].push_back({x, {}});
  total += out.simplices[0].size();
  for (std::size_t n = 1; n <= max_dimension; ++n) {
    for (const auto& s : out.simplices[n - 1]) {
      Obj last = vertex(c, s, n - 1);
      for (Mor f = 0; f < c.num_morphisms(); ++f) {
        if (c.src(f) != last) continue;
        Simplex t = s;
        t.arrows.push_back(f);
        out.simplices[n].push_back(std::move(t));
        if (++total > simplex_bound) {
          throw Error("DimensionBound", "more than " + std::to_string(simplex_bound) + " simplices");
        }
      }
    }
  }

  std::vector<std::map<Simplex, std::size_t>> index(max_dimension + 1);
  for (std::size_t n = 0; n <= max_dimension; ++n) {
    for (std::size_t k = 0; k < out.simplices[n].size(); ++k) index[n][out.simplices[n][k]] = k;
  }
  out.faces.resize(max_dimension + 1);
  out.degeneracies.resize(max_dimension + 1);
  for (std::size_t n = 0; n <= max_dimension; ++n) {
    if (n >= 1) {
      out.faces[n].resize(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        for (const auto& s : out.simplices[n]) out.faces[n][i].push_back(index[n - 1].at(face(c, s, i)));
      }
    }
    if (n < max_dimension) {
      out.degeneracies[n].resize(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        for (const auto& s : out.simplices[n]) out.degeneracies[n][i].push_back(index[n + 1].at(degeneracy(c, s, i)));
      }
    }
  }

  auto violation = [](const std::string& law, std::size_t n, std::size_t i, std::size_t j) {
    return Error("SimplicialViolation", law + " fails in dimension " + std::to_string(n) + " at i=" +
                                            std::to_string(i) + ", j=" + std::to_string(j));
  };
  const auto& d = out.faces;
  const auto& s = out.degeneracies;
  for (std::size_t n = 0; n <= max_dimension; ++n) {
    for (std::size_t k = 0; k < out.count(n); ++k) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2) {
        for (std::size_t j = 1; j <= n; ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            if (d[n - 1][i][d[n][j][k]] != d[n - 1][j - 1][d[n][i][k]]) throw violation("face-face", n, i, j);
          }
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= max_dimension) {
        for (std::size_t j = 0; j <= n; ++j) {
          for (std::size_t i = 0; i <= j; ++i) {
            if (s[n + 1][i][s[n][j][k]] != s[n + 1][j + 1][s[n][i][k]]) throw violation("degeneracy", n, i, j);
          }
        }
      }
      if (n < max_dimension) {
        for (std::size_t j = 0; j <= n; ++j) {
          const std::size_t up = s[n][j][k];
          for (std::size_t i = 0; i <= n + 1; ++i) {
            const std::size_t got = d[n + 1][i][up];
            bool ok;
            if (i == j || i == j + 1) {
              ok = got == k;
            } else if (i < j) {
              ok = got == s[n - 1][j - 1][d[n][i][k]];
            } else {
              ok = got == s[n - 1][j][d[n][i - 1][k]];
            }
            if (!ok) throw violation("face-degeneracy", n, i, j);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace layercake
