// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "layercake/catalog.hpp"
#include "layercake/cohomology.hpp"
#include "layercake/grothendieck.hpp"
#include "layercake/pointed.hpp"
#include "layercake/schreier.hpp"
#include "layercake/surjectivity.hpp"
#include "layercake/twogroup.hpp"
#include "oracles.hpp"

namespace layercake {
namespace {

// Collects failures for one criterion; the first few are printed.
class Findings {
 public:
  void fail(const std::string& what) {
    if (messages_.size() < 10) messages_.push_back(what);
    ++count_;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }

  bool ok() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& messages() const { return messages_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 for none
  std::function<void(Findings&)> body;
};

GModule inversion_module(const FinGroup& g, std::int64_t n, const std::function<bool(Elem)>& inverts) {
  auto a = FinAbGroup::cyclic(n);
  std::vector<AbHom> action;
  for (Elem x = 0; x < g.order(); ++x) action.push_back(AbHom::make(a, a, {{inverts(x) ? n - 1 : 1}}));
  return GModule::make(g, a, action);
}

std::vector<std::int64_t> unit_vector(const GModule& m) {
  std::vector<std::int64_t> u;
  for (Elem x = 0; x < m.group.order(); ++x) u.push_back(m.act(x, {1})[0]);
  return u;
}

std::string factors(const FinAbGroup& a) {
  std::ostringstream s;
  s << "[";
  auto f = a.invariant_factors();
  for (std::size_t k = 0; k < f.size(); ++k) s << (k ? "," : "") << f[k];
  s << "]";
  return s.str();
}

// 1. Matrix cohomology against the brute-force enumeration and the oracle.
void cohomology_oracle(Findings& out) {
  struct Case {
    std::string name;
    GModule module;
    std::vector<std::size_t> degrees;
  };
  std::vector<Case> cases;
  for (std::size_t g : {2, 3}) {
    for (std::int64_t a : {2, 3, 4}) {
      cases.push_back({"Z" + std::to_string(g) + " on Z" + std::to_string(a),
                       GModule::trivial(FinGroup::cyclic(g), FinAbGroup::cyclic(a)), {1, 2, 3}});
    }
  }
  cases.push_back({"Z2 inverting Z3", inversion_module(FinGroup::cyclic(2), 3, [](Elem x) { return x == 1; }), {1, 2}});
  for (const auto& c : cases) {
    for (std::size_t n : c.degrees) {
      const std::string where = c.name + " degree " + std::to_string(n);
      auto h = cohomology(c.module, n);
      auto brute = brute_force_cohomology(c.module, n);
      out.expect(h.group.invariant_factors() == brute.group.invariant_factors(),
                 where + ": matrix " + factors(h.group) + " vs brute force " + factors(brute.group));
      oracle::CyclicModule cm{c.module.group, c.module.coefficients.modulus(0), unit_vector(c.module)};
      out.expect(oracle::order_histogram(h.group) == oracle::cohomology_orders(cm, n),
                 where + ": class orders differ from the oracle");
    }
  }
}

GModule trivial_module(std::size_t g, std::int64_t a) {
  return GModule::trivial(FinGroup::cyclic(g), FinAbGroup::cyclic(a));
}

bool pentagon_agrees(const GModule& m, const Cochain& alpha) {
  return check_pentagon(build_from_data({m, alpha})).holds == is_cocycle(alpha, m);
}

// 2. The pentagon for skeletal data holds exactly for 3-cocycles.
void pentagon_cocycle(Findings& out) {
  std::size_t checked = 0;
  for (auto [g, a] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 2}, {2, 4}, {3, 2}}) {
    GModule m = trivial_module(g, a);
    const std::size_t tuples = cochain_length(m.group, 3);
    std::size_t total = 1;
    for (std::size_t k = 0; k < tuples; ++k) total *= static_cast<std::size_t>(a);
    for (std::size_t code = 0; code < total; ++code) {
      Cochain alpha = Cochain::zero(m, 3);
      std::size_t rest = code;
      for (std::size_t k = 0; k < tuples; ++k) {
        alpha.values[k] = {static_cast<std::int64_t>(rest % a)};
        rest /= a;
      }
      ++checked;
      out.expect(pentagon_agrees(m, alpha),
                 "|G|=" + std::to_string(g) + " |A|=" + std::to_string(a) + " cochain " + std::to_string(code));
    }
  }
  std::mt19937_64 rng(20240611);
  const std::vector<GModule> order_four{GModule::trivial(FinGroup::cyclic(4), FinAbGroup::cyclic(2)),
                                        GModule::trivial(FinGroup::direct_product(FinGroup::cyclic(2),
                                                                                  FinGroup::cyclic(2)),
                                                         FinAbGroup::cyclic(2))};
  const std::vector<CohomologyResult> h3{cohomology(order_four[0], 3), cohomology(order_four[1], 3)};
  std::size_t cocycles = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const GModule& m = order_four[trial % 2];
    Cochain alpha = Cochain::zero(m, 3);
    // Every fourth sample is a random cocycle (a coboundary plus random class
    // representatives), so both verdicts occur.
    if (trial % 4 == 0) {
      Cochain beta = Cochain::zero(m, 2);
      for (auto& v : beta.values) v = {static_cast<std::int64_t>(rng() % 2)};
      alpha = differential(beta, m);
      for (const auto& rep : h3[trial % 2].representatives) {
        if (rng() % 2) alpha = add(m, alpha, rep);
      }
    } else {
      for (auto& v : alpha.values) v = {static_cast<std::int64_t>(rng() % 2)};
    }
    cocycles += is_cocycle(alpha, m) ? 1 : 0;
    ++checked;
    out.expect(pentagon_agrees(m, alpha), "random trial " + std::to_string(trial));
  }
  out.expect(cocycles > 0 && cocycles < 1000, "random sample did not cover both verdicts");
  out.note(std::to_string(checked) + " cochains, " + std::to_string(cocycles) + " random cocycles");
}

std::int64_t oracle_class_count(const GModule& m, std::size_t n) {
  oracle::CyclicModule cm{m.group, m.coefficients.modulus(0), unit_vector(m)};
  std::int64_t total = 0;
  for (const auto& [order, count] : oracle::cohomology_orders(cm, n)) total += count;
  return total;
}

// 3. Skeletal 2-groups with π₁ = Z/2 and π₂ = Z/2 or Z/3.
void two_group_counts(Findings& out) {
  for (auto [a, expected] : std::vector<std::pair<std::int64_t, std::size_t>>{{2, 2}, {3, 1}}) {
    GModule m = GModule::trivial(FinGroup::cyclic(2), FinAbGroup::cyclic(a));
    auto reps = classify(m);
    const std::string where = "Z2, Z" + std::to_string(a);
    out.expect(reps.size() == expected, where + ": " + std::to_string(reps.size()) + " representatives");
    out.expect(static_cast<std::int64_t>(reps.size()) == oracle_class_count(m, 3), where + ": oracle H3 disagrees");
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out.expect(check_pentagon(build_from_data(reps[i])).holds, where + ": representative fails the pentagon");
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        out.expect(!equivalent_two_groups(reps[i], reps[j]), where + ": representatives are equivalent");
      }
    }
  }
}

// 4. extract → build recovers every extension for every normalized section.
void schreier_roundtrip(Findings& out) {
  std::size_t runs = 0;
  bool central_z2[4] = {false, false, false, false};  // z4, z2xz2, d4, q8
  for (const auto& e : testing::extension_corpus()) {
    const Extension& ext = e.extension;
    for (const auto& s : all_normalized_sections(ext)) {
      auto c = extract_cocycle(ext, s);
      out.expect(check_cocycle_conditions(c).holds, e.name + ": extracted data fails the cocycle conditions");
      auto rebuilt = build_extension(c);
      out.expect(extensions_equivalent(rebuilt, ext), e.name + ": rebuilt extension is not equivalent");
      out.expect(oracle::extensions_equivalent(rebuilt, ext), e.name + ": oracle rejects the equivalence");
      ++runs;
    }
    if (ext.f.order() == 2 && ext.b.order() == ext.e.order() / 2) {
      const std::string g = e.name.substr(0, e.name.find('/'));
      if (g == "z4") central_z2[0] = true;
      if (g == "z2xz2") central_z2[1] = true;
      if (g == "d4") central_z2[2] = true;
      if (g == "q8") central_z2[3] = true;
    }
  }
  for (bool seen : central_z2) out.expect(seen, "corpus misses a required central Z2 extension");
  out.note(std::to_string(runs) + " section roundtrips");
}

// 5. Central extensions counted by cocycles and by extensions.
void central_counts(Findings& out) {
  for (auto [f, expected] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 1}}) {
    auto r = classify_central_extensions(FinGroup::cyclic(2), FinGroup::cyclic(f));
    const std::string where = "Z2 by Z" + std::to_string(f);
    out.expect(r.by_cochains == expected, where + ": cocycle enumeration gives " + std::to_string(r.by_cochains));
    out.expect(r.by_extensions == expected, where + ": extension enumeration gives " + std::to_string(r.by_extensions));
    out.expect(r.by_cohomology == expected, where + ": cohomology gives " + std::to_string(r.by_cohomology));
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
      for (std::size_t j = i + 1; j < r.representatives.size(); ++j) {
        out.expect(!oracle::extensions_equivalent(r.representatives[i], r.representatives[j]),
                   where + ": oracle identifies two representatives");
      }
    }
  }
}

// 6. Set-valued functors survive construct → reconstruct.
void grothendieck_roundtrip(Findings& out) {
  std::size_t total = 0;
  for (const auto& b : testing::small_bases()) {
    if (b.category->num_morphisms() > 6) continue;
    std::size_t seen = 0;
    testing::for_each_set_functor(b.category, 3, [&](const SetValuedFunctor& f) {
      ++seen;
      auto g = grothendieck_construct(f);
      const bool ours = check_discrete_opfibration(g.projection).holds;
      out.expect(ours, b.name + ": projection is not a discrete opfibration");
      out.expect(oracle::discrete_opfibration(g.projection), b.name + ": oracle rejects the projection");
      auto back = reconstruct(g.projection);
      out.expect(oracle::set_functors_isomorphic(back, f), b.name + ": reconstruction is not isomorphic");
      out.expect(set_functor_isomorphism(back, f).has_value(), b.name + ": library finds no isomorphism");
    });
    total += seen;
  }
  out.note(std::to_string(total) + " set-valued functors");
}

SurjectivityProfile as_profile(bool s0, bool s1, bool s2) { return {s0, s1, s2}; }

// 7. Each tower stage has its declared profile and the composite recovers p.
void factorization_laws(Findings& out) {
  auto corpus = testing::functor_corpus();
  out.expect(corpus.size() == 20, "corpus has " + std::to_string(corpus.size()) + " functors");
  for (const auto& f : corpus) {
    auto ref = oracle::profile(f.functor);
    auto t = factorize(f.functor);
    out.expect(surjectivity_profile(t.p2) == as_profile(true, true, ref.surj2), f.name + ": p2 profile");
    out.expect(surjectivity_profile(t.p1) == as_profile(true, ref.surj1, true), f.name + ": p1 profile");
    out.expect(surjectivity_profile(t.p0) == as_profile(ref.surj0, true, true), f.name + ": p0 profile");
    auto o2 = oracle::profile(t.p2);
    auto o1 = oracle::profile(t.p1);
    auto o0 = oracle::profile(t.p0);
    out.expect(o2.surj0 && o2.surj1 && o1.surj0 && o1.surj2 && o0.surj1 && o0.surj2,
               f.name + ": oracle disagrees with a stage profile");
    auto composite = compose(t.p0, compose(t.p1, t.p2));
    out.expect(composite.domain_ptr() == f.functor.domain_ptr() &&
                   same_category(composite.codomain_ptr(), f.functor.codomain_ptr()),
               f.name + ": composite has the wrong shape");
    auto checked = NatTransformation::make(composite, f.functor,
                                           {t.composite_iso.components().begin(), t.composite_iso.components().end()});
    out.expect(checked.is_isomorphism(), f.name + ": composite is not isomorphic to p");
    out.expect(find_natural_isomorphism(composite, f.functor).has_value(), f.name + ": no natural isomorphism");
  }
}

// 8. Verdict level bounds every essential fiber; for groupoids the bound is sharp.
void fiber_dimensions(Findings& out) {
  std::size_t groupoid_cases = 0;
  for (const auto& f : testing::functor_corpus()) {
    const FinFunctor& p = f.functor;
    const int k = forgetfulness_level(classify_forgetfulness(p).tag);
    int worst = -2;
    for (Obj x = 0; x < p.codomain().num_objects(); ++x) {
      worst = std::max(worst, dimension_level(classify_dimension(*essential_fiber(p, x).category)));
    }
    out.expect(worst <= k, f.name + ": a fiber exceeds the verdict level");
    auto report = fiber_dimension_report(p);
    out.expect(report.forward_consistent, f.name + ": report marks the forward direction inconsistent");
    if (is_groupoid(p.domain()) && is_groupoid(p.codomain())) {
      ++groupoid_cases;
      out.expect(k <= worst, f.name + ": groupoid converse fails");
      out.expect(report.groupoid_input && report.converse_consistent, f.name + ": report converse flag");
    }
  }
  out.note(std::to_string(groupoid_cases) + " groupoid functors");
}

struct SquareTally {
  std::size_t squares = 0;
  std::size_t filled = 0;
};

// Every commutative-up-to-iso square from p to m, each handed to `visit`.
void for_each_square(const FinFunctor& p, const FinFunctor& m, const std::function<void(const LiftingSquare&)>& visit) {
  for_each_functor(p.domain_ptr(), m.domain_ptr(), [&](const FinFunctor& top) {
    for_each_functor(p.codomain_ptr(), m.codomain_ptr(), [&](const FinFunctor& bottom) {
      auto upper = compose(m, top);
      auto lower = compose(bottom, p);
      for_each_natural_isomorphism(upper, lower, [&](const NatTransformation& iso) {
        visit(LiftingSquare::make(p, m, top, bottom, iso));
        return true;
      });
      return true;
    });
    return true;
  });
}

// 9. (eso, ff) and (eso + full, faithful) squares have fillers; the negative fixture has none.
void orthogonality(Findings& out) {
  auto corpus = testing::functor_corpus();
  SquareTally eso_ff;
  SquareTally full_faithful;
  std::size_t pairs = 0;
  for (const auto& pe : corpus) {
    auto pp = oracle::profile(pe.functor);
    if (!pp.surj0) continue;
    for (const auto& me : corpus) {
      auto mp = oracle::profile(me.functor);
      const bool first = mp.surj1 && mp.surj2;
      const bool second = pp.surj1 && mp.surj2;
      if (!first && !second) continue;
      ++pairs;
      for_each_square(pe.functor, me.functor, [&](const LiftingSquare& sq) {
        const bool filled = has_diagonal_filler(sq).filler.has_value();
        if (first) {
          ++eso_ff.squares;
          eso_ff.filled += filled;
        }
        if (second) {
          ++full_faithful.squares;
          full_faithful.filled += filled;
        }
        out.expect(filled, pe.name + " vs " + me.name + ": square without a filler");
      });
    }
  }
  auto neg = testing::negative_square_fixture();
  auto neg_square = LiftingSquare::make(neg.p, neg.m, FinFunctor::identity(neg.p.domain_ptr()),
                                        FinFunctor::identity(neg.p.codomain_ptr()), NatTransformation::identity(neg.p));
  auto r = has_diagonal_filler(neg_square);
  out.expect(!r.filler.has_value() && r.filler_count == 0, neg.name + ": unexpected filler");
  out.note(std::to_string(pairs) + " pairs, " + std::to_string(eso_ff.squares) + " (eso, ff) squares, " +
           std::to_string(full_faithful.squares) + " (eso+full, faithful) squares");
  out.expect(eso_ff.squares > 0 && full_faithful.squares > 0, "no squares enumerated");
}

// 10. d∘d = 0 on random cochains and Eckmann-Hilton on 2-group fixtures.
void chain_complex(Findings& out) {
  const auto z2 = FinGroup::cyclic(2);
  const auto z4 = FinGroup::cyclic(4);
  const auto klein = FinGroup::direct_product(z2, z2);
  std::vector<GModule> modules;
  for (const auto& g : {FinGroup::trivial(), z2, FinGroup::cyclic(3), z4, klein}) {
    for (std::int64_t a : {2, 3, 4}) modules.push_back(GModule::trivial(g, FinAbGroup::cyclic(a)));
    modules.push_back(GModule::trivial(g, FinAbGroup::direct_sum_of_cyclic({2, 2})));
  }
  modules.push_back(inversion_module(z2, 3, [](Elem x) { return x == 1; }));
  modules.push_back(inversion_module(z2, 4, [](Elem x) { return x == 1; }));
  modules.push_back(inversion_module(z4, 3, [](Elem x) { return x % 2 == 1; }));
  modules.push_back(inversion_module(klein, 4, [](Elem x) { return x / 2 == 1; }));

  std::mt19937_64 rng(7);
  CohomologyLimits limits;
  limits.size_guard = std::size_t{1} << 20;
  for (int trial = 0; trial < 1000; ++trial) {
    const GModule& m = modules[rng() % modules.size()];
    const std::size_t degree = rng() % 5;
    const bool normalized = rng() % 2 == 0;
    Cochain c = Cochain::zero(m, degree, normalized);
    for (auto& v : c.values) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::int64_t>(rng() % m.coefficients.modulus(i));
    }
    auto dd = differential(differential(c, m, limits), m, limits);
    bool zero = true;
    for (const auto& v : dd.values) zero = zero && m.coefficients.is_zero(v);
    out.expect(zero, "d∘d ≠ 0 in trial " + std::to_string(trial) + " (degree " + std::to_string(degree) + ")");
  }

  std::size_t fixtures = 0;
  for (const auto& m : {GModule::trivial(z2, FinAbGroup::cyclic(2)), GModule::trivial(z2, FinAbGroup::cyclic(4)),
                        GModule::trivial(FinGroup::cyclic(3), FinAbGroup::cyclic(3)),
                        GModule::trivial(klein, FinAbGroup::cyclic(2)),
                        inversion_module(z2, 3, [](Elem x) { return x == 1; })}) {
    for (const auto& rep : classify(m)) {
      auto t = build_from_data(rep);
      ++fixtures;
      out.expect(eckmann_hilton_holds(t), "π₂ is not commutative on a fixture");
      auto back = skeletal_data(t);
      out.expect(isomorphic(back.pi2(), m.coefficients), "extracted π₂ differs from the input");
    }
  }
  out.note("1000 random cochains, " + std::to_string(fixtures) + " 2-group fixtures");
}

// 11. loop(deloop(M)) = M and deloop(loop(P)) ≃ P.
void loop_deloop(Findings& out) {
  auto monoids = testing::monoid_corpus();
  out.expect(monoids.size() == 10, "monoid corpus has " + std::to_string(monoids.size()) + " entries");
  for (const auto& m : monoids) out.expect(loop(deloop(m.monoid)) == m.monoid, m.name + ": loop(deloop(M)) ≠ M");
  for (const auto& p : testing::pointed_corpus()) {
    auto back = deloop(loop(p.pointed));
    out.expect(are_equivalent(back.category, p.pointed.category).equivalent, p.name + ": deloop(loop(P)) ≄ P");
  }
}

}  // namespace
}  // namespace layercake

int main() {
  using namespace layercake;
  const std::vector<Criterion> criteria{
      {1, "cohomology agrees with brute force and the oracle", 60, cohomology_oracle},
      {2, "pentagon holds exactly for 3-cocycles", 120, pentagon_cocycle},
      {3, "2-group class counts 2 and 1", 0, two_group_counts},
      {4, "Schreier roundtrip for every normalized section", 60, schreier_roundtrip},
      {5, "central extension counts 2 and 1 by two methods", 0, central_counts},
      {6, "Grothendieck roundtrip on small bases", 60, grothendieck_roundtrip},
      {7, "factorization tower laws", 0, factorization_laws},
      {8, "fiber dimension forward and groupoid converse", 0, fiber_dimensions},
      {9, "orthogonality of lifting squares", 0, orthogonality},
      {10, "d∘d = 0 and Eckmann-Hilton", 0, chain_complex},
      {11, "loop/deloop roundtrip", 0, loop_deloop},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Findings findings;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(findings);
    } catch (const Error& e) {
      findings.fail(std::string("unexpected error ") + e.what());
    } catch (const std::exception& e) {
      findings.fail(std::string("unexpected exception ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds > c.time_limit_s) {
      findings.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", findings.ok() ? "PASS" : "FAIL", c.number, c.title.c_str(),
                seconds);
    for (const auto& n : findings.notes()) std::printf("    %s\n", n.c_str());
    for (const auto& m : findings.messages()) std::printf("    failure: %s\n", m.c_str());
    if (findings.count() > findings.messages().size()) {
      std::printf("    ... %zu failures in total\n", findings.count());
    }
    std::fflush(stdout);
    failures += findings.ok() ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
