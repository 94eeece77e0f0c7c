#include <gtest/gtest.h>

#include "corpus.hpp"
#include "expect.hpp"
#include "layercake/schreier.hpp"
#include "oracles.hpp"

namespace layercake {
namespace {

FinGroup z(std::size_t n) { return FinGroup::cyclic(n); }

Extension z4_over_z2() { return extension_from_normal_subgroup(z(4), {0, 2}); }
Extension klein_over_z2() { return extension_from_normal_subgroup(FinGroup::direct_product(z(2), z(2)), {0, 2}); }

NonabelianCocycle trivial_cocycle(const FinGroup& b, const FinGroup& f) {
  std::vector<Elem> id(f.order());
  for (Elem x = 0; x < f.order(); ++x) id[x] = x;
  return {b, f, std::vector<std::vector<Elem>>(b.order(), id), std::vector<Elem>(b.order() * b.order(), f.identity())};
}

TEST(Schreier, Sections) {
  auto split = klein_over_z2();
  auto s = choose_section(split);
  EXPECT_EQ(s.map, (std::vector<Elem>{0, 1}));
  auto c = extract_cocycle(split, s);
  for (Elem x : c.factor) EXPECT_EQ(x, c.f.identity());
  for (Elem b = 0; b < 2; ++b) EXPECT_EQ(c.phi[b], (std::vector<Elem>{0, 1}));

  auto z4 = z4_over_z2();
  EXPECT_EQ(choose_section(z4).map, (std::vector<Elem>{0, 1}));
  auto c4 = extract_cocycle(z4, choose_section(z4));
  EXPECT_EQ(z4.i(c4.factor_at(1, 1)), 2u);
  for (const auto& e : testing::extension_corpus()) {
    auto sec = choose_section(e.extension);
    EXPECT_EQ(sec.map[e.extension.b.identity()], e.extension.e.identity()) << e.name;
    for (Elem b = 0; b < e.extension.b.order(); ++b) EXPECT_EQ(e.extension.p(sec.map[b]), b) << e.name;
  }
}

TEST(Schreier, ExactnessIsChecked) {
  EXPECT_LAYERCAKE_ERROR(Extension::make(z(2), z(4), z(2), {0, 2}, {0, 0, 0, 0}), "ExactnessViolation");
  EXPECT_LAYERCAKE_ERROR(Extension::make(z(2), z(4), z(2), {0, 1}, {0, 1, 0, 1}), "HomomorphismViolation");
  EXPECT_LAYERCAKE_ERROR(extension_from_normal_subgroup(FinGroup::symmetric3(), {0, 3}), "NotNormal");
}

TEST(Schreier, UnnormalizedSections) {
  auto z4 = z4_over_z2();
  SetSection s{{2, 1}};
  EXPECT_LAYERCAKE_ERROR(extract_cocycle(z4, s), "SectionViolation");
  auto c = extract_cocycle(z4, s, true);
  EXPECT_TRUE(oracle::extensions_equivalent(z4, z4));
  EXPECT_EQ(c.factor.size(), 4u);
}

TEST(Schreier, CocycleConditionsOnCorpus) {
  for (const auto& e : testing::extension_corpus()) {
    for (const auto& s : all_normalized_sections(e.extension)) {
      EXPECT_TRUE(check_cocycle_conditions(extract_cocycle(e.extension, s)).holds) << e.name;
    }
  }
}

TEST(Schreier, CorruptedCocycles) {
  auto c = extract_cocycle(z4_over_z2(), choose_section(z4_over_z2()));
  c.factor[1 * 2 + 0] = 1;
  auto v = check_cocycle_conditions(c);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.law, "normalization");
  EXPECT_LAYERCAKE_ERROR(build_extension(c), "CocycleInvalid");

  auto t = trivial_cocycle(z(3), z(3));
  t.factor[1 * 3 + 2] = 1;
  auto w = check_cocycle_conditions(t);
  EXPECT_FALSE(w.holds);
  EXPECT_EQ(w.law, "associativity");
  EXPECT_EQ(w.witness.size(), 3u);
  try {
    build_extension(t);
    FAIL() << "expected CocycleInvalid";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "CocycleInvalid");
  }
}

TEST(Schreier, BuildExtension) {
  auto direct = build_extension(trivial_cocycle(z(2), z(3)));
  EXPECT_EQ(direct.e.order(), 6u);
  EXPECT_TRUE(direct.e.is_abelian());
  EXPECT_TRUE(groups_isomorphic(direct.e, z(6)));
  auto z4 = z4_over_z2();
  auto rebuilt = build_extension(extract_cocycle(z4, choose_section(z4)));
  EXPECT_TRUE(groups_isomorphic(rebuilt.e, z(4)));
  EXPECT_TRUE(extensions_equivalent(rebuilt, z4));
  EXPECT_TRUE(oracle::extensions_equivalent(rebuilt, z4));
}

TEST(Schreier, Equivalence) {
  for (const auto& e : testing::extension_corpus()) EXPECT_TRUE(extensions_equivalent(e.extension, e.extension));
  EXPECT_FALSE(extensions_equivalent(z4_over_z2(), klein_over_z2()));
  EXPECT_FALSE(oracle::extensions_equivalent(z4_over_z2(), klein_over_z2()));
}

TEST(Schreier, SectionIndependence) {
  for (const auto& e : testing::extension_corpus()) {
    auto sections = all_normalized_sections(e.extension);
    auto first = build_extension(extract_cocycle(e.extension, sections.front()));
    for (const auto& s : sections) {
      EXPECT_TRUE(extensions_equivalent(first, build_extension(extract_cocycle(e.extension, s)))) << e.name;
    }
  }
}

TEST(Schreier, Aut2Group) {
  auto a2 = build_aut2group(z(2));
  EXPECT_EQ(a2.automorphisms.size(), 1u);
  EXPECT_EQ(a2.two_cells[0][0].size(), 2u);
  EXPECT_EQ(build_aut2group(z(3)).automorphisms.size(), 2u);
  auto a1 = build_aut2group(FinGroup::trivial());
  EXPECT_EQ(a1.automorphisms.size(), 1u);
  EXPECT_EQ(a1.two_cells[0][0].size(), 1u);
  // Inner automorphisms of S3 are all of Aut(S3).
  auto s3 = build_aut2group(FinGroup::symmetric3());
  EXPECT_EQ(s3.automorphisms.size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(s3.two_cells[0][k].size(), 1u);
}

TEST(Schreier, AbelianCocycle) {
  GModule m = GModule::trivial(z(2), FinAbGroup::cyclic(2));
  auto h2 = cohomology(m, 2);
  auto z4 = z4_over_z2();
  auto a = to_abelian_cocycle(extract_cocycle(z4, choose_section(z4)));
  EXPECT_TRUE(is_cocycle(a.cochain, a.module));
  EXPECT_EQ(cohomology(a.module, 2).class_of(a.cochain), AbElem{1});
  auto d = to_abelian_cocycle(extract_cocycle(klein_over_z2(), choose_section(klein_over_z2())));
  EXPECT_EQ(cohomology(d.module, 2).class_of(d.cochain), AbElem{0});
  auto s3 = extension_from_normal_subgroup(FinGroup::symmetric3(), {0, 1, 2});
  auto twisted = to_abelian_cocycle(extract_cocycle(s3, choose_section(s3)));
  EXPECT_TRUE(is_cocycle(twisted.cochain, twisted.module));
  EXPECT_EQ(h2.group.order(), BigInt(2));
}

TEST(Schreier, CentralExtensionCounts) {
  auto r22 = classify_central_extensions(z(2), z(2));
  EXPECT_EQ(r22.by_cohomology, 2u);
  EXPECT_EQ(r22.by_cochains, 2u);
  EXPECT_EQ(r22.by_extensions, 2u);
  auto r23 = classify_central_extensions(z(2), z(3));
  EXPECT_EQ(r23.by_cohomology, 1u);
  EXPECT_EQ(r23.by_cochains, 1u);
  EXPECT_EQ(r23.by_extensions, 1u);
  EXPECT_LAYERCAKE_ERROR(classify_central_extensions(z(2), FinGroup::symmetric3()), "NotAbelian");
}

}  // namespace
}  // namespace layercake
