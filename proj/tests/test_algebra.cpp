#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace ghostpi;

namespace {

Presentation pres(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  Presentation p(gens);
  for (const auto& r : rels)
    p.add_relator(parse_word(r, gens));
  return p;
}

AbelianInvariants ab(std::size_t rank, std::vector<int> torsion) {
  AbelianInvariants a;
  a.free_rank = rank;
  for (int t : torsion)
    a.torsion.push_back(t);
  return a;
}

} // namespace

// ------------------------------------------------------------------- words

TEST(Word, FreeReduceCancelsAdjacentInverses) {
  Word w{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}};
  EXPECT_EQ(free_reduce(w), (Word{{2, 1}}));
}

TEST(Word, CyclicReduceStripsConjugation) {
  Word w{{0, 1}, {1, 1}, {1, 1}, {0, -1}};
  EXPECT_EQ(cyclic_reduce(w), (Word{{1, 1}, {1, 1}}));
}

TEST(Word, InverseReversesAndFlips) {
  Word w{{0, 1}, {1, -1}};
  EXPECT_EQ(inverse(w), (Word{{1, 1}, {0, -1}}));
  EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
}

TEST(Word, NormalizedRelatorIsLeastRotation) {
  Word w{{1, 1}, {0, 1}, {1, 1}};
  Word n = normalize_relator(w);
  EXPECT_EQ(n, (Word{{0, 1}, {1, 1}, {1, 1}}));
  EXPECT_EQ(normalize_relator(n), n);
}

TEST(Word, ClassKeyIdentifiesInverseRotations) {
  Word a{{0, 1}, {1, 1}, {1, 1}};
  Word b = inverse(Word{{1, 1}, {0, 1}, {1, 1}});
  EXPECT_EQ(relator_class_key(a), relator_class_key(b));
}

// ----------------------------------------------------------- presentations

TEST(Presentation, ParsesPowersAndInverses) {
  std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(parse_word("a b^-1 a^2", names), (Word{{0, 1}, {1, -1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(parse_word("a*b", names), (Word{{0, 1}, {1, 1}}));
  EXPECT_THROW(parse_word("c", names), InvariantError);
}

TEST(Presentation, RejectsDuplicateGenerators) {
  EXPECT_THROW(Presentation({"a", "a"}), InvariantError);
}

TEST(Presentation, FreeHasNoRelators) {
  auto p = Presentation::free(3);
  EXPECT_EQ(p.generator_count(), 3u);
  EXPECT_TRUE(p.relators().empty());
}

// ------------------------------------------------------------------- SNF

TEST(SmithNormalForm, CoprimeDiagonal) {
  EXPECT_EQ(smith_normal_form({{2, 0}, {0, 3}}), (std::vector<BigInt>{1, 6}));
}

TEST(SmithNormalForm, ZeroMatrixHasNoInvariants) {
  EXPECT_TRUE(smith_normal_form({{0, 0}, {0, 0}}).empty());
}

TEST(SmithNormalForm, KleinFourRelationMatrix) {
  IntMatrix m{{2, 0}, {0, 2}, {2, 2}};
  EXPECT_EQ(smith_normal_form(m), (std::vector<BigInt>{2, 2}));
  EXPECT_EQ(support::invariant_factors_by_minors(m), (std::vector<BigInt>{2, 2}));
}

TEST(SmithNormalForm, AgreesWithDeterminantDivisorsOnRandomMatrices) {
  for (auto seed : support::kSeeds) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m(static_cast<std::size_t>(dim(rng)));
      const auto cols = static_cast<std::size_t>(dim(rng));
      for (auto& row : m)
        for (std::size_t j = 0; j < cols; ++j)
          row.push_back(entry(rng));
      EXPECT_EQ(smith_normal_form(m), support::invariant_factors_by_minors(m)) << "seed " << seed;
    }
  }
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
  BigInt big = BigInt(1) << 80;
  IntMatrix m{{big, 0}, {0, big * 3}};
  EXPECT_EQ(smith_normal_form(m), (std::vector<BigInt>{big, big * 3}));
}

// ------------------------------------------------------------ abelianization

TEST(Abelianization, Examples) {
  EXPECT_EQ(abelianization(pres({"a"}, {})), ab(1, {}));
  EXPECT_EQ(abelianization(pres({"a"}, {"a^2"})), ab(0, {2}));
  EXPECT_EQ(abelianization(pres({"a", "b"}, {"a^2", "b^2", "a b a b"})), ab(0, {2, 2}));
}

TEST(Abelianization, QuotientDivisibility) {
  EXPECT_TRUE(is_quotient_of(ab(0, {2}), ab(1, {})));
  EXPECT_TRUE(is_quotient_of(ab(0, {2}), ab(0, {6})));
  EXPECT_FALSE(is_quotient_of(ab(0, {4}), ab(0, {2, 2})));
  EXPECT_TRUE(is_quotient_of(ab(0, {2, 2}), ab(0, {2, 4})));
  EXPECT_FALSE(is_quotient_of(ab(1, {}), ab(0, {5})));
}

// ---------------------------------------------------------------- homs

TEST(CountHoms, Examples) {
  const auto& s3 = groups::by_name("S3");
  EXPECT_EQ(count_homs(pres({"a"}, {}), s3), 6);
  EXPECT_EQ(count_homs(pres({"a"}, {"a^2"}), s3), 4);
  EXPECT_EQ(count_homs(pres({"a", "b"}, {"a b a^-1 b^-1"}), groups::by_name("Z2")), 4);
}

TEST(CountHoms, AgreesWithBruteForce) {
  for (auto seed : support::kSeeds) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 12; ++trial) {
      auto p = support::random_presentation(rng, 1 + trial % 3, 1 + trial % 2, 5);
      for (const auto& name : {"Z4", "S3", "Q8", "A4"}) {
        const auto& t = groups::by_name(name);
        EXPECT_EQ(count_homs(p, t), support::brute_force_homs(p, t)) << p.to_string() << " -> " << name;
      }
    }
  }
}

TEST(CountHoms, FreeGeneratorsAreNotCapped) {
  Presentation p = Presentation::free(9);
  BigInt expected = 1;
  for (int i = 0; i < 9; ++i)
    expected *= 24;
  EXPECT_EQ(count_homs(p, groups::by_name("S4")), expected);
}

TEST(CountHoms, CapsRaise) {
  HomCaps caps;
  caps.max_target_order = 5;
  EXPECT_THROW(count_homs(pres({"a"}, {"a^2"}), groups::by_name("S3"), caps), CapError);
  Presentation p = pres({"a", "b", "c", "d", "e"}, {"a b c d e"});
  EXPECT_THROW(count_homs(p, groups::by_name("Z2")), CapError);
}

TEST(CountHoms, MultiplicativeOverDirectProducts) {
  const auto& z2 = groups::by_name("Z2");
  const auto z2z2 = direct_product(z2, z2);
  for (auto seed : support::kSeeds) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      auto p = support::random_presentation(rng, 3, 2, 6);
      EXPECT_EQ(count_homs(p, z2z2), count_homs(p, z2) * count_homs(p, z2));
    }
  }
}

// -------------------------------------------------------------- tietze

TEST(Tietze, Examples) {
  EXPECT_EQ(tietze_simplify(pres({"a", "b"}, {"b"})).presentation, pres({"a"}, {}));
  EXPECT_EQ(tietze_simplify(pres({"a"}, {"a a^-1"})).presentation, pres({"a"}, {}));
  EXPECT_EQ(tietze_simplify(pres({"a", "b"}, {"a b"})).presentation.generator_count(), 1u);
  EXPECT_TRUE(tietze_simplify(pres({"a", "b"}, {"a b"})).presentation.relators().empty());
}

TEST(Tietze, KeepsTorsionRelator) {
  auto s = tietze_simplify(pres({"x", "y"}, {"x^2", "y", "x y"})).presentation;
  EXPECT_EQ(abelianization(s), ab(0, {}));
  auto t = tietze_simplify(pres({"x", "y"}, {"x^2", "y x^-1"})).presentation;
  EXPECT_EQ(t.generator_count(), 1u);
  EXPECT_EQ(abelianization(t), ab(0, {2}));
}

TEST(Tietze, IterationCapIsReported) {
  SimplifyOptions opt;
  opt.max_iterations = 0;
  EXPECT_TRUE(tietze_simplify(pres({"a", "b"}, {"b"}), opt).capped);
}

// --------------------------------------------------------- fingerprints

TEST(Fingerprint, TrivialPresentation) {
  auto panel = groups::panel_from_names(groups::default_panel_names());
  auto f = fingerprint(Presentation{}, panel);
  EXPECT_EQ(f.abelian, ab(0, {}));
  for (const auto& [name, count] : f.hom_counts)
    EXPECT_EQ(count, 1) << name;
  EXPECT_EQ(f, free_group_fingerprint(0, panel));
}

TEST(Fingerprint, Examples) {
  auto panel = groups::panel_from_names(groups::default_panel_names());
  // y = 1 and x y = 1 force x = 1: this one is trivial, not Z/2
  EXPECT_FALSE(profinite_proxy_equal(pres({"a"}, {"a^2"}), pres({"x", "y"}, {"x^2", "y", "x y"}), panel).all_match());
  EXPECT_TRUE(profinite_proxy_equal(pres({"a"}, {"a^2"}), pres({"x", "y"}, {"x^2", "y x^-1"}), panel).all_match());
  auto z_vs_z2 = profinite_proxy_equal(pres({"a"}, {}), pres({"a"}, {"a^2"}), panel);
  EXPECT_FALSE(z_vs_z2.all_match());
  for (const auto& e : z_vs_z2.entries)
    if (e.name == "Z3") {
      EXPECT_EQ(e.left, "3");
      EXPECT_EQ(e.right, "1");
      EXPECT_FALSE(e.match);
    }
  EXPECT_TRUE(profinite_proxy_equal(pres({"a"}, {"a^2"}), pres({"b"}, {"b^2"}), panel).all_match());
}

TEST(Fingerprint, PanelOverrideFromEnvironment) {
  setenv("GHOSTPI_PANEL", "Z2,Q8", 1);
  auto panel = groups::default_panel();
  unsetenv("GHOSTPI_PANEL");
  ASSERT_EQ(panel.size(), 2u);
  EXPECT_EQ(panel[1].name, "Q8");
  EXPECT_EQ(groups::default_panel().size(), 11u);
}

// --------------------------------------------------------------- groups

TEST(FiniteGroup, RejectsNonAssociativeTable) {
  // a Latin square with identity 0 that is not a group
  std::vector<std::vector<std::size_t>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup{t}, InvariantError);
}

TEST(FiniteGroup, RejectsTableWithoutIdentity) {
  EXPECT_THROW(FiniteGroup({{1, 0}, {0, 0}}), InvariantError);
}

TEST(FiniteGroup, QuotientByNormalSubgroup) {
  const auto& s3 = groups::by_name("S3");
  ElementSet a3;
  for (std::size_t x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) != 2)
      a3.push_back(x);
  ASSERT_TRUE(s3.is_normal(a3));
  auto [q, map] = s3.quotient(a3);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_EQ(map.size(), 6u);
}

TEST(GroupCatalog, CountsPerOrder) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  std::vector<std::size_t> counts(24, 0);
  for (const auto& g : groups::catalog())
    ++counts.at(g.group.order() - 1);
  EXPECT_EQ(counts, expected);
}

TEST(GroupCatalog, PairwiseNonIsomorphic) {
  const auto& all = groups::catalog();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].group.order() == all[j].group.order()) {
        EXPECT_FALSE(support::isomorphic(all[i].group, all[j].group)) << all[i].name << " ~ " << all[j].name;
      }
}

TEST(GroupCatalog, PanelGroupsHaveExpectedOrders) {
  std::map<std::string, std::size_t> orders{{"Z2", 2}, {"Z3", 3}, {"Z4", 4}, {"Z2xZ2", 4}, {"S3", 6}, {"Z5", 5},
                                            {"Z6", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"S4", 24}};
  for (const auto& [name, n] : orders)
    EXPECT_EQ(groups::by_name(name).order(), n) << name;
  EXPECT_TRUE(support::isomorphic(groups::by_name("Z6"), direct_product(groups::cyclic(2), groups::cyclic(3))));
  EXPECT_FALSE(groups::by_name("D4").is_abelian());
  EXPECT_THROW(groups::by_name("nope"), SchemaError);
}
