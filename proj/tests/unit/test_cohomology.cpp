#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "expect.hpp"
#include "layercake/cohomology.hpp"
#include "oracles.hpp"

namespace layercake {
namespace {

GModule trivial(std::size_t g, std::int64_t a) { return GModule::trivial(FinGroup::cyclic(g), FinAbGroup::cyclic(a)); }

GModule inversion(std::size_t g, std::int64_t a) {
  FinGroup grp = FinGroup::cyclic(g);
  FinAbGroup coeff = FinAbGroup::cyclic(a);
  std::vector<AbHom> action;
  for (Elem x = 0; x < g; ++x) action.push_back(AbHom::make(coeff, coeff, {{x % 2 == 0 ? 1 : a - 1}}));
  return GModule::make(grp, coeff, action);
}

Cochain spike(const GModule& m, std::size_t degree, std::int64_t value) {
  Cochain c = Cochain::zero(m, degree);
  std::vector<Elem> ones(degree, 1);
  c.set_value(m, ones, {value});
  return c;
}

std::vector<std::int64_t> factors(const GModule& m, std::size_t n) {
  return cohomology(m, n).group.invariant_factors();
}

TEST(Cochain, Layout) {
  auto g = FinGroup::cyclic(3);
  EXPECT_EQ(cochain_length(g, 2), 4u);
  EXPECT_EQ(cochain_length(g, 2, false), 9u);
  EXPECT_EQ(cochain_arguments(g, 2, 1), (std::vector<Elem>{1, 2}));
  EXPECT_EQ(cochain_index(g, std::vector<Elem>{2, 1}), 2u);
  auto m = trivial(2, 2);
  Cochain c = Cochain::zero(m, 2);
  EXPECT_LAYERCAKE_ERROR(c.set_value(m, std::vector<Elem>{0, 1}, {1}), "NormalizationViolation");
}

TEST(Differential, ZeroAndSpike) {
  auto m = trivial(2, 4);
  EXPECT_EQ(differential(Cochain::zero(m, 2), m), Cochain::zero(m, 3));
  auto d = differential(spike(m, 3, 1), m);
  EXPECT_EQ(d.value_at(m, std::vector<Elem>{1, 1, 1, 1}), AbElem{2});
  EXPECT_LAYERCAKE_ERROR(differential(Cochain::zero(m, 8), m), "DegreeOverflow");
}

TEST(Differential, MatrixAgreesWithFormula) {
  std::mt19937 rng(3);
  for (const auto& m : {trivial(3, 4), inversion(2, 3), inversion(4, 4)}) {
    for (std::size_t n = 0; n <= 3; ++n) {
      auto dm = differential_matrix(m, n);
      auto cg = cochain_group(m, n);
      for (int trial = 0; trial < 20; ++trial) {
        AbElem x(cg.rank());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::uniform_int_distribution<std::int64_t>(0, cg.modulus(i) - 1)(rng);
        auto c = unflatten(m, n, x);
        EXPECT_EQ(flatten(differential(c, m)), dm.apply(x));
      }
    }
  }
}

TEST(Cocycles, Examples) {
  auto m22 = trivial(2, 2);
  auto zero = Cochain::zero(m22, 3);
  EXPECT_TRUE(is_cocycle(zero, m22));
  auto w = is_coboundary(zero, m22);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, Cochain::zero(m22, 2));
  auto s = spike(m22, 3, 1);
  EXPECT_TRUE(is_cocycle(s, m22));
  EXPECT_FALSE(is_coboundary(s, m22).has_value());
  auto m24 = trivial(2, 4);
  EXPECT_FALSE(is_cocycle(spike(m24, 3, 1), m24));
  EXPECT_LAYERCAKE_ERROR(is_coboundary(Cochain::zero(m22, 0), m22), "DegreeMismatch");
}

TEST(Cohomology, SmallGroups) {
  EXPECT_EQ(factors(trivial(2, 2), 1), std::vector<std::int64_t>{2});
  EXPECT_EQ(factors(trivial(2, 2), 2), std::vector<std::int64_t>{2});
  EXPECT_EQ(factors(trivial(2, 2), 3), std::vector<std::int64_t>{2});
  EXPECT_TRUE(factors(trivial(3, 2), 2).empty());
  EXPECT_EQ(factors(trivial(4, 4), 2), std::vector<std::int64_t>{4});
  EXPECT_TRUE(factors(inversion(2, 3), 1).empty());
  // H^0 is the fixed points.
  EXPECT_EQ(factors(inversion(2, 4), 0), std::vector<std::int64_t>{2});
}

TEST(Cohomology, Cohomologous) {
  auto m = trivial(2, 2);
  auto s = spike(m, 3, 1);
  EXPECT_TRUE(cohomologous(s, s, m));
  EXPECT_FALSE(cohomologous(s, Cochain::zero(m, 3), m));
  std::mt19937 rng(11);
  auto m4 = trivial(3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Cochain b = Cochain::zero(m4, 1);
    for (auto& v : b.values) v = {std::uniform_int_distribution<std::int64_t>(0, 3)(rng)};
    Cochain z = Cochain::zero(m4, 2);
    EXPECT_TRUE(cohomologous(z, add(m4, z, differential(b, m4)), m4));
  }
  EXPECT_LAYERCAKE_ERROR(cohomologous(s, Cochain::zero(m, 2), m), "DegreeMismatch");
}

TEST(Cohomology, ClassesAndRepresentatives) {
  auto m = trivial(2, 2);
  auto r = cohomology(m, 3);
  ASSERT_EQ(r.representatives.size(), 1u);
  EXPECT_EQ(r.representatives[0], spike(m, 3, 1));
  EXPECT_EQ(r.class_of(spike(m, 3, 1)), AbElem{1});
  EXPECT_EQ(r.class_of(Cochain::zero(m, 3)), AbElem{0});
  auto m4 = trivial(2, 4);
  EXPECT_LAYERCAKE_ERROR(cohomology(m4, 3).class_of(spike(m4, 3, 1)), "NotACocycle");
}

TEST(Cohomology, MatchesIndependentOracle) {
  struct Case {
    GModule m;
    oracle::CyclicModule ref;
  };
  std::vector<Case> cases;
  for (std::size_t g : {2, 3, 4}) {
    for (std::int64_t a : {2, 3, 4}) {
      cases.push_back({trivial(g, a), {FinGroup::cyclic(g), a, std::vector<std::int64_t>(g, 1)}});
    }
  }
  cases.push_back({inversion(2, 3), {FinGroup::cyclic(2), 3, {1, 2}}});
  cases.push_back({inversion(2, 4), {FinGroup::cyclic(2), 4, {1, 3}}});
  cases.push_back({inversion(4, 3), {FinGroup::cyclic(4), 3, {1, 2, 1, 2}}});
  for (const auto& c : cases) {
    for (std::size_t n = 0; n <= 3; ++n) {
      std::size_t tuples = cochain_length(c.m.group, n);
      if (std::pow(double(c.ref.modulus), double(tuples)) > 3e5) continue;
      EXPECT_EQ(oracle::order_histogram(cohomology(c.m, n).group), oracle::cohomology_orders(c.ref, n))
          << "|G|=" << c.m.group.order() << " A=Z/" << c.ref.modulus << " n=" << n;
    }
  }
}

TEST(Cohomology, BruteForceAgrees) {
  for (std::size_t g : {1, 2, 3}) {
    for (std::int64_t a : {2, 3, 4}) {
      auto m = trivial(g, a);
      for (std::size_t n = 0; n <= 3; ++n) {
        auto b = brute_force_cohomology(m, n);
        EXPECT_TRUE(isomorphic(b.group, cohomology(m, n).group)) << g << " " << a << " " << n;
        if (g == 1 && n >= 1) EXPECT_EQ(b.class_count, 1);
      }
    }
  }
  // Degree 1 with trivial action counts homomorphisms G → A.
  EXPECT_EQ(brute_force_cohomology(trivial(4, 2), 1).class_count, 2);
  EXPECT_EQ(brute_force_cohomology(trivial(2, 4), 1).class_count, 2);
}

TEST(Cohomology, UnnormalizedAgrees) {
  for (const auto& m : {trivial(2, 2), trivial(3, 3), inversion(2, 3)}) {
    for (std::size_t n = 1; n <= 2; ++n) {
      EXPECT_TRUE(isomorphic(cohomology(m, n, false).group, cohomology(m, n).group));
    }
  }
}

TEST(Cohomology, Limits) {
  CohomologyLimits tiny;
  tiny.size_guard = 4;
  EXPECT_LAYERCAKE_ERROR(cohomology(trivial(4, 2), 3, true, tiny), "SizeGuard");
  CohomologyLimits few;
  few.enumeration_bound = 10;
  EXPECT_LAYERCAKE_ERROR(brute_force_cohomology(trivial(3, 4), 3, true, few), "EnumerationBound");
  FinGroup z2 = FinGroup::cyclic(2);
  FinAbGroup z3 = FinAbGroup::cyclic(3);
  EXPECT_LAYERCAKE_ERROR(GModule::make(z2, z3, {AbHom::identity(z3), AbHom::make(z3, z3, {{0}})}), "ActionViolation");
}

TEST(Cohomology, DSquaredVanishes) {
  std::mt19937 rng(5);
  std::vector<GModule> modules{trivial(2, 2), trivial(3, 4), trivial(4, 3), inversion(2, 3), inversion(4, 4)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& m = modules[trial % modules.size()];
    std::size_t n = trial % 3;
    Cochain c = Cochain::zero(m, n);
    for (auto& v : c.values) v = {std::uniform_int_distribution<std::int64_t>(0, m.coefficients.modulus(0) - 1)(rng)};
    EXPECT_EQ(differential(differential(c, m), m), Cochain::zero(m, n + 2));
  }
}

}  // namespace
}  // namespace layercake
