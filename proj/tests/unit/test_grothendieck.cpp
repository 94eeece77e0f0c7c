#include <gtest/gtest.h>

#include "corpus.hpp"
#include "expect.hpp"
#include "layercake/catalog.hpp"
#include "layercake/grothendieck.hpp"
#include "layercake/surjectivity.hpp"
#include "oracles.hpp"

namespace layercake {
namespace {

using namespace catalog;

SetValuedFunctor swap_action() {
  auto z2 = group_category(FinGroup::cyclic(2));
  return SetValuedFunctor::make(z2, {{"x", "y"}}, {{0, 1}, {1, 0}});
}

SetValuedFunctor collapse() {
  auto c2 = chain_category(2);
  // Morphisms of the chain: id_0, 0->1, id_1.
  return SetValuedFunctor::make(c2, {{"p", "q"}, {"r"}}, {{0, 1}, {0, 0}, {0}});
}

TEST(Grothendieck, PointFunctorGivesTheBase) {
  for (const auto& b : testing::small_bases()) {
    auto g = grothendieck_construct(SetValuedFunctor::point(b.category));
    EXPECT_EQ(g.total->num_objects(), b.category->num_objects()) << b.name;
    EXPECT_EQ(g.total->num_morphisms(), b.category->num_morphisms()) << b.name;
    auto prof = surjectivity_profile(g.projection);
    EXPECT_TRUE(prof.surj0 && prof.surj1 && prof.surj2) << b.name;
  }
}

TEST(Grothendieck, SwapActionIsTheUniversalCover) {
  auto g = grothendieck_construct(swap_action());
  EXPECT_EQ(g.total->num_objects(), 2u);
  EXPECT_TRUE(is_groupoid(*g.total));
  EXPECT_TRUE(isomorphic_objects(*g.total, 0, 1));
  EXPECT_EQ(hom_set(*g.total, 0, 0).size(), 1u);
  EXPECT_TRUE(are_equivalent(g.total, terminal_category()).equivalent);
}

TEST(Grothendieck, CollapseMapCounts) {
  auto g = grothendieck_construct(collapse());
  EXPECT_EQ(g.total->num_objects(), 3u);
  std::size_t nonidentity = 0;
  for (Mor f = 0; f < g.total->num_morphisms(); ++f) nonidentity += !g.total->is_identity(f);
  EXPECT_EQ(nonidentity, 2u);
  EXPECT_EQ(g.total->object_label(0), "(0,0)");
}

TEST(Grothendieck, OpfibrationChecks) {
  EXPECT_TRUE(check_discrete_opfibration(grothendieck_construct(collapse()).projection).holds);
  auto z2 = group_category(FinGroup::cyclic(2));
  auto p = FinFunctor::make(terminal_category(), z2, {0}, {0});
  auto v = check_discrete_opfibration(p);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(v.counterexample->morphism, 1u);
  EXPECT_EQ(v.counterexample->lifts, 0u);
  EXPECT_TRUE(check_discrete_opfibration(FinFunctor::identity(chain_category(3))).holds);
  for (const auto& f : testing::functor_corpus()) {
    EXPECT_EQ(check_discrete_opfibration(f.functor).holds, oracle::discrete_opfibration(f.functor)) << f.name;
  }
}

TEST(Grothendieck, Reconstruct) {
  auto id = FinFunctor::identity(chain_category(2));
  auto point = reconstruct(id);
  for (const auto& s : point.sets) EXPECT_EQ(s.size(), 1u);
  auto swap = swap_action();
  auto back = reconstruct(grothendieck_construct(swap).projection);
  EXPECT_EQ(back.maps[1], (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(set_functor_isomorphism(swap, back).has_value());
  auto z2 = group_category(FinGroup::cyclic(2));
  EXPECT_LAYERCAKE_ERROR(reconstruct(FinFunctor::make(terminal_category(), z2, {0}, {0})), "NotAFibration");
}

TEST(Grothendieck, SetFunctorValidation) {
  auto c2 = chain_category(2);
  EXPECT_LAYERCAKE_ERROR(SetValuedFunctor::make(c2, {{"p"}, {"r"}}, {{0}, {1}, {0}}), "FunctorViolation");
  auto z2 = group_category(FinGroup::cyclic(2));
  // A non-involution cannot be the action of the generator.
  EXPECT_LAYERCAKE_ERROR(SetValuedFunctor::make(z2, {{"a", "b"}}, {{0, 1}, {0, 0}}), "FunctorViolation");
}

TEST(Grothendieck, RoundtripOnSmallBases) {
  for (const auto& b : testing::small_bases()) {
    if (b.category->num_morphisms() > 4) continue;
    testing::for_each_set_functor(b.category, 2, [&](const SetValuedFunctor& f) {
      auto g = grothendieck_construct(f);
      auto back = reconstruct(g.projection);
      EXPECT_TRUE(set_functor_isomorphism(f, back).has_value()) << b.name;
      EXPECT_TRUE(oracle::set_functors_isomorphic(f, back)) << b.name;
    });
  }
}

TEST(Grothendieck, IsomorphismOverBase) {
  auto g1 = grothendieck_construct(swap_action());
  auto g2 = grothendieck_construct(swap_action());
  EXPECT_TRUE(isomorphism_over_base(g1.projection, g2.projection).has_value());
  auto trivial = SetValuedFunctor::make(g1.projection.codomain_ptr(), {{"x", "y"}}, {{0, 1}, {0, 1}});
  auto g3 = grothendieck_construct(trivial);
  EXPECT_FALSE(isomorphism_over_base(g1.projection, g3.projection).has_value());
}

TEST(Grothendieck, FibrationOverGroupoidBase) {
  auto g = grothendieck_construct(swap_action());
  EXPECT_TRUE(check_grothendieck_fibration(g.projection).holds);
  EXPECT_TRUE(check_discrete_opfibration(opposite_functor(g.projection)).holds);
}

TEST(Grothendieck, RestrictionStyleFibration) {
  // Over 0 → 1 with two objects upstairs over 1 and a chosen pullback over 0.
  auto c3 = chain_category(3);
  auto c2 = chain_category(2);
  auto p = FinFunctor::make(c3, c2, {0, 1, 1},
                            {c2->identity(0), c2->hom(0, 1)[0], c2->hom(0, 1)[0], c2->identity(1), c2->identity(1),
                             c2->identity(1)});
  EXPECT_TRUE(check_grothendieck_fibration(p).holds);
  EXPECT_TRUE(is_cartesian(p, c3->hom(0, 2)[0]));
}

TEST(Grothendieck, MissingCartesianLift) {
  auto p = FinFunctor::make(discrete_category(2), chain_category(2), {0, 1}, {0, 2});
  auto v = check_grothendieck_fibration(p);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(v.counterexample->morphism, 1u);
  EXPECT_EQ(v.counterexample->target, 1u);
}

}  // namespace
}  // namespace layercake
