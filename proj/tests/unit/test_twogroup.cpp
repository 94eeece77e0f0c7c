#include <gtest/gtest.h>

#include "expect.hpp"
#include "layercake/catalog.hpp"
#include "layercake/twogroup.hpp"
#include "oracles.hpp"

namespace layercake {
namespace {

SkeletalTwoGroup make(std::size_t g, std::int64_t a, std::int64_t spike) {
  GModule m = GModule::trivial(FinGroup::cyclic(g), FinAbGroup::cyclic(a));
  Cochain alpha = Cochain::zero(m, 3);
  if (spike != 0) alpha.set_value(m, std::vector<Elem>{1, 1, 1}, {spike});
  return {m, alpha};
}

TEST(TwoGroup, StrictTwoGroup) {
  auto t = build_from_data(make(2, 2, 0));
  EXPECT_EQ(t.category().num_objects(), 2u);
  EXPECT_EQ(t.category().num_morphisms(), 4u);
  EXPECT_EQ(hom_set(t.category(), 1, 1).size(), 2u);
  EXPECT_TRUE(check_pentagon(t).holds);
  for (Obj x = 0; x < 2; ++x)
    for (Obj y = 0; y < 2; ++y)
      for (Obj z = 0; z < 2; ++z) EXPECT_TRUE(t.category().is_identity(t.associator(x, y, z)));
  EXPECT_TRUE(skeletal_data(t).alpha == Cochain::zero(skeletal_data(t).module, 3));
}

TEST(TwoGroup, SpikeCocycle) {
  auto t = build_from_data(make(2, 2, 1));
  EXPECT_TRUE(check_pentagon(t).holds);
  EXPECT_FALSE(t.category().is_identity(t.associator(1, 1, 1)));
  EXPECT_TRUE(t.category().is_identity(t.associator(0, 1, 1)));
}

TEST(TwoGroup, NonCocycleFailsThePentagon) {
  auto v = check_pentagon(build_from_data(make(2, 4, 1)));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(*v.counterexample, (std::array<Obj, 4>{1, 1, 1, 1}));
}

TEST(TwoGroup, TrivialGroup) {
  GModule m = GModule::trivial(FinGroup::trivial(), FinAbGroup::direct_sum_of_cyclic({2, 3}));
  auto t = build_from_data({m, Cochain::zero(m, 3)});
  EXPECT_EQ(t.category().num_objects(), 1u);
  EXPECT_EQ(t.category().num_morphisms(), 6u);
  EXPECT_EQ(decategorify(t).order(), 1u);
}

TEST(TwoGroup, SkeletalDataRoundtrip) {
  for (std::int64_t s : {0, 1}) {
    auto d = make(2, 2, s);
    auto back = skeletal_data(build_from_data(d));
    EXPECT_EQ(back.alpha, d.alpha);
    EXPECT_TRUE(isomorphic(back.pi2(), d.pi2()));
    EXPECT_EQ(back.pi1().order(), 2u);
  }
}

TEST(TwoGroup, EckmannHilton) {
  for (auto d : {make(2, 2, 1), make(3, 3, 1), make(2, 4, 2)}) {
    auto t = build_from_data(d);
    EXPECT_TRUE(eckmann_hilton_holds(t));
    const FinCategory& c = t.category();
    auto loops = hom_set(c, t.unit(), t.unit());
    for (Mor f : loops) {
      for (Mor g : loops) EXPECT_EQ(c.compose(f, g), c.compose(g, f));
    }
  }
}

TEST(TwoGroup, Decategorify) {
  auto t = build_from_data(make(2, 2, 0));
  EXPECT_EQ(decategorify(t).order(), 2u);
  // Two isomorphic objects, ⊗ is xor, everything else forced by thinness.
  auto c = catalog::codiscrete_category(2);
  std::vector<Obj> objects{0, 1, 1, 0};
  std::vector<Mor> morphisms(16);
  for (Mor f = 0; f < 4; ++f) {
    for (Mor g = 0; g < 4; ++g) {
      Obj s = c->src(f) ^ c->src(g), u = c->tgt(f) ^ c->tgt(g);
      morphisms[f * 4 + g] = c->hom(s, u)[0];
    }
  }
  std::vector<Mor> assoc(8);
  for (Obj x = 0; x < 2; ++x)
    for (Obj y = 0; y < 2; ++y)
      for (Obj z = 0; z < 2; ++z) assoc[(x * 2 + y) * 2 + z] = c->identity(x ^ y ^ z);
  auto nonskeletal = FinMonoidalGroupoid::make(c, objects, morphisms, 0, assoc);
  EXPECT_EQ(decategorify(nonskeletal).order(), 1u);
  EXPECT_LAYERCAKE_ERROR(skeletal_data(nonskeletal), "NotSkeletal");
}

TEST(TwoGroup, Equivalence) {
  auto a = make(2, 2, 0), b = make(2, 2, 1);
  EXPECT_TRUE(equivalent_two_groups(a, a));
  EXPECT_FALSE(equivalent_two_groups(a, b));
  // α + dβ for a 2-cochain β.
  GModule m = GModule::trivial(FinGroup::cyclic(3), FinAbGroup::cyclic(3));
  auto r = cohomology(m, 3);
  Cochain beta = Cochain::zero(m, 2);
  beta.set_value(m, std::vector<Elem>{1, 2}, {1});
  beta.set_value(m, std::vector<Elem>{2, 2}, {2});
  for (const auto& rep : r.representatives) {
    SkeletalTwoGroup t{m, rep};
    SkeletalTwoGroup shifted{m, add(m, rep, differential(beta, m))};
    EXPECT_TRUE(equivalent_two_groups(t, shifted, IsoScope::FixedIdentifications));
  }
}

TEST(TwoGroup, Classify) {
  auto z2z2 = classify(GModule::trivial(FinGroup::cyclic(2), FinAbGroup::cyclic(2)));
  ASSERT_EQ(z2z2.size(), 2u);
  EXPECT_FALSE(equivalent_two_groups(z2z2[0], z2z2[1]));
  EXPECT_EQ(classify(GModule::trivial(FinGroup::cyclic(2), FinAbGroup::cyclic(3))).size(), 1u);
  EXPECT_EQ(classify(GModule::trivial(FinGroup::trivial(), FinAbGroup::cyclic(5))).size(), 1u);
}

TEST(TwoGroup, Z3CoefficientsMergeUnderAutomorphisms) {
  auto reps = classify(GModule::trivial(FinGroup::cyclic(3), FinAbGroup::cyclic(3)));
  ASSERT_EQ(reps.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(equivalent_two_groups(reps[i], reps[j], IsoScope::FixedIdentifications), i == j);
    }
  }
  // Inverting A identifies the classes 1 and 2.
  EXPECT_TRUE(equivalent_two_groups(reps[1], reps[2], IsoScope::Any));
  EXPECT_FALSE(equivalent_two_groups(reps[0], reps[1], IsoScope::Any));
}

TEST(TwoGroup, PentagonMatchesCocycleExhaustively) {
  GModule m = GModule::trivial(FinGroup::cyclic(3), FinAbGroup::cyclic(2));
  const std::size_t tuples = cochain_length(m.group, 3);
  for (std::size_t bits = 0; bits < (std::size_t{1} << tuples); ++bits) {
    Cochain alpha = Cochain::zero(m, 3);
    for (std::size_t k = 0; k < tuples; ++k) alpha.values[k] = {static_cast<std::int64_t>((bits >> k) & 1)};
    bool pentagon = check_pentagon(build_from_data({m, alpha})).holds;
    EXPECT_EQ(pentagon, is_cocycle(alpha, m));
  }
}

TEST(TwoGroup, RejectsNonStrictUnit) {
  auto c = catalog::group_category(FinGroup::cyclic(2));
  // One object; ⊗ on loops is addition, but a_{*,*,*} = g is not the identity at the unit.
  std::vector<Mor> morphisms{0, 1, 1, 0};
  EXPECT_NE(testing::error_name([&] { FinMonoidalGroupoid::make(c, {0}, morphisms, 0, {1}); }), "");
}

}  // namespace
}  // namespace layercake
