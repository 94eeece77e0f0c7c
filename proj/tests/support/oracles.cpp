#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace layercake::oracle {

namespace {

bool iso(const FinCategory& c, Obj x, Obj y) {
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    if (c.src(f) != x || c.tgt(f) != y) continue;
    for (Mor g = 0; g < c.num_morphisms(); ++g) {
      if (c.src(g) != y || c.tgt(g) != x) continue;
      if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) return true;
    }
  }
  return false;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

Profile profile(const FinFunctor& p) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  Profile out{true, true, true};
  for (Obj y = 0; y < b.num_objects(); ++y) {
    bool hit = false;
    for (Obj x = 0; x < e.num_objects() && !hit; ++x) hit = iso(b, p.on_object(x), y);
    out.surj0 = out.surj0 && hit;
  }
  for (Obj x = 0; x < e.num_objects(); ++x) {
    for (Obj y = 0; y < e.num_objects(); ++y) {
      std::set<Mor> images;
      std::size_t count = 0;
      for (Mor f = 0; f < e.num_morphisms(); ++f) {
        if (e.src(f) != x || e.tgt(f) != y) continue;
        images.insert(p.on_morphism(f));
        ++count;
      }
      std::size_t target = 0;
      for (Mor g = 0; g < b.num_morphisms(); ++g) {
        if (b.src(g) == p.on_object(x) && b.tgt(g) == p.on_object(y)) ++target;
      }
      out.surj1 = out.surj1 && images.size() == target;
      out.surj2 = out.surj2 && images.size() == count;
    }
  }
  return out;
}

std::map<std::int64_t, std::int64_t> cohomology_orders(const CyclicModule& m, std::size_t degree) {
  const FinGroup& g = m.group;
  const std::int64_t q = m.modulus;
  std::vector<Elem> nonid;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x != g.identity()) nonid.push_back(x);
  }
  const std::size_t k = nonid.size();
  auto tuples = [&](std::size_t n) {
    std::size_t t = 1;
    for (std::size_t i = 0; i < n; ++i) t *= k;
    return t;
  };
  // Position of g among the non-identity elements, or k for the identity.
  std::vector<std::size_t> pos(g.order(), k);
  for (std::size_t i = 0; i < k; ++i) pos[nonid[i]] = i;

  using Cochain = std::vector<std::int64_t>;
  auto value = [&](const Cochain& c, const std::vector<Elem>& args) -> std::int64_t {
    std::size_t idx = 0;
    for (Elem a : args) {
      if (pos[a] == k) return 0;
      idx = idx * k + pos[a];
    }
    return c[idx];
  };
  auto d = [&](const Cochain& c, std::size_t n) {
    Cochain out(tuples(n + 1));
    std::vector<Elem> args(n + 1);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      std::size_t r = idx;
      for (std::size_t i = n + 1; i-- > 0;) {
        args[i] = nonid[r % k];
        r /= k;
      }
      std::int64_t v = m.unit[args[0]] * value(c, {args.begin() + 1, args.end()});
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Elem> merged;
        for (std::size_t j = 0; j <= n; ++j) {
          if (j == i) continue;
          merged.push_back(j == i - 1 ? g.mul(args[i - 1], args[i]) : args[j]);
        }
        v += (i % 2 ? -1 : 1) * value(c, merged);
      }
      v += ((n + 1) % 2 ? -1 : 1) * value(c, {args.begin(), args.end() - 1});
      out[idx] = mod(v, q);
    }
    return out;
  };
  auto all = [&](std::size_t n, const std::function<void(const Cochain&)>& visit) {
    Cochain c(tuples(n), 0);
    for (;;) {
      visit(c);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == q) c[i++] = 0;
      if (i == c.size()) return;
    }
  };

  std::set<Cochain> boundaries;
  if (degree == 0) {
    boundaries.insert(Cochain(1, 0));
  } else {
    all(degree - 1, [&](const Cochain& b) { boundaries.insert(d(b, degree - 1)); });
  }
  std::map<std::int64_t, std::int64_t> cocycles_by_order;
  all(degree, [&](const Cochain& c) {
    Cochain dc = d(c, degree);
    if (std::any_of(dc.begin(), dc.end(), [](std::int64_t v) { return v != 0; })) return;
    Cochain multiple(c.size(), 0);
    for (std::int64_t o = 1;; ++o) {
      for (std::size_t i = 0; i < c.size(); ++i) multiple[i] = mod(multiple[i] + c[i], q);
      if (boundaries.contains(multiple)) {
        ++cocycles_by_order[o];
        break;
      }
    }
  });
  std::map<std::int64_t, std::int64_t> out;
  for (auto [o, n] : cocycles_by_order) out[o] = n / static_cast<std::int64_t>(boundaries.size());
  return out;
}

std::map<std::int64_t, std::int64_t> order_histogram(const FinAbGroup& a) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& x : a.elements()) {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::int64_t m = a.modulus(i);
      o = std::lcm(o, m / std::gcd(m, x[i]));
    }
    ++out[o];
  }
  return out;
}

std::size_t composable_chains(const FinCategory& c, std::size_t n) {
  std::vector<std::size_t> ending(c.num_objects(), 1);
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::size_t> next(c.num_objects(), 0);
    for (Mor f = 0; f < c.num_morphisms(); ++f) next[c.tgt(f)] += ending[c.src(f)];
    ending = std::move(next);
  }
  return std::accumulate(ending.begin(), ending.end(), std::size_t{0});
}

bool discrete_opfibration(const FinFunctor& p) {
  const FinCategory& e = p.domain();
  const FinCategory& b = p.codomain();
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    for (Obj x = 0; x < e.num_objects(); ++x) {
      if (p.on_object(x) != b.src(f)) continue;
      std::size_t lifts = 0;
      for (Mor g = 0; g < e.num_morphisms(); ++g) {
        if (e.src(g) == x && p.on_morphism(g) == f) ++lifts;
      }
      if (lifts != 1) return false;
    }
  }
  return true;
}

bool extensions_equivalent(const Extension& a, const Extension& b) {
  if (a.f.order() != b.f.order() || a.b.order() != b.b.order() || a.e.order() != b.e.order()) return false;
  const FinGroup& e1 = a.e;
  const FinGroup& e2 = b.e;
  const std::size_t nb = a.b.order();
  std::vector<Elem> s1(nb, kNone), i1_inv(e1.order(), kNone);
  for (Elem x = 0; x < e1.order(); ++x) {
    if (s1[a.p(x)] == kNone) s1[a.p(x)] = x;
  }
  s1[a.b.identity()] = e1.identity();
  for (Elem f = 0; f < a.f.order(); ++f) i1_inv[a.i(f)] = f;
  std::vector<std::vector<Elem>> preimages(nb);
  for (Elem y = 0; y < e2.order(); ++y) preimages[b.p(y)].push_back(y);
  preimages[b.b.identity()] = {e2.identity()};

  std::vector<std::size_t> choice(nb, 0);
  for (;;) {
    std::vector<Elem> theta(e1.order());
    for (Elem x = 0; x < e1.order(); ++x) {
      Elem base = a.p(x);
      Elem f = i1_inv[e1.mul(x, e1.inverse(s1[base]))];
      theta[x] = e2.mul(b.i(f), preimages[base][choice[base]]);
    }
    bool hom = true;
    for (Elem x = 0; x < e1.order() && hom; ++x) {
      for (Elem y = 0; y < e1.order() && hom; ++y) hom = theta[e1.mul(x, y)] == e2.mul(theta[x], theta[y]);
    }
    if (hom) return true;
    std::size_t i = 0;
    while (i < nb && ++choice[i] == preimages[i].size()) choice[i++] = 0;
    if (i == nb) return false;
  }
}

bool set_functors_isomorphic(const SetValuedFunctor& f, const SetValuedFunctor& g) {
  const FinCategory& c = *f.base;
  const std::size_t n = c.num_objects();
  for (Obj x = 0; x < n; ++x) {
    if (f.sets[x].size() != g.sets[x].size()) return false;
  }
  std::vector<std::vector<std::size_t>> perm(n);
  std::function<bool(Obj)> search = [&](Obj x) {
    if (x == n) return true;
    perm[x].resize(f.sets[x].size());
    std::iota(perm[x].begin(), perm[x].end(), 0);
    do {
      bool ok = true;
      for (Mor m = 0; m < c.num_morphisms() && ok; ++m) {
        Obj s = c.src(m), t = c.tgt(m);
        if (s > x || t > x) continue;
        for (std::size_t i = 0; i < f.sets[s].size() && ok; ++i) {
          ok = perm[t][f.maps[m][i]] == g.maps[m][perm[s][i]];
        }
      }
      if (ok && search(x + 1)) return true;
    } while (std::next_permutation(perm[x].begin(), perm[x].end()));
    return false;
  };
  return search(0);
}

}  // namespace layercake::oracle
