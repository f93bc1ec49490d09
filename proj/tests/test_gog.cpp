#include <gtest/gtest.h>

#include "support.hpp"

using namespace ghostpi;

namespace {

const auto kPanel = groups::panel_from_names(groups::default_panel_names());

Presentation cyclic_presentation(int n) {
  Presentation p({"a"});
  p.add_relator(Word(static_cast<std::size_t>(n), Letter{0, 1}));
  return p;
}

Word power(std::uint32_t gen, int n) {
  return Word(static_cast<std::size_t>(std::abs(n)), Letter{gen, static_cast<std::int8_t>(n > 0 ? 1 : -1)});
}

GraphOfGroups segment(Presentation a, Presentation b, std::vector<std::pair<Word, Word>> edge = {}) {
  GraphOfGroups g;
  g.vertices = {0, 1};
  g.edges = {{0, 1}};
  g.vertex_groups[0] = std::move(a);
  g.vertex_groups[1] = std::move(b);
  g.edge_groups = {std::move(edge)};
  return g;
}

} // namespace

TEST(GraphOfGroups, FreeProductZ2Z3) {
  auto g = segment(cyclic_presentation(2), cyclic_presentation(3));
  auto p = gog_presentation(g);
  EXPECT_EQ(abelianization(p).to_string(), "Z/6");
  EXPECT_EQ(count_homs(p, groups::by_name("S3")), 4 * 3);
  EXPECT_EQ(count_homs(p, groups::by_name("S3")), support::brute_force_homs(p, groups::by_name("S3")));
  EXPECT_EQ(fingerprint(kill_inertia(g), kPanel), free_group_fingerprint(0, kPanel));
}

TEST(GraphOfGroups, AmalgamZ4Z6OverZ2) {
  auto g = segment(cyclic_presentation(4), cyclic_presentation(6), {{power(0, 2), power(0, 3)}});
  auto p = gog_presentation(g);
  const auto a = abelianization(p);
  EXPECT_EQ(a.free_rank, 0u);
  BigInt order = 1;
  for (const auto& d : a.torsion)
    order *= d;
  EXPECT_EQ(order, 12);  // |Z4 x Z6| / |Z2|
  for (const auto& name : {"Z2", "Z3", "S3", "Z4"})
    EXPECT_EQ(count_homs(p, groups::by_name(name)), support::brute_force_homs(p, groups::by_name(name))) << name;
}

TEST(GraphOfGroups, LoopEdgeIsAnHnnExtension) {
  // <a, t | t a t^-1 = a^2>
  GraphOfGroups g;
  g.vertices = {0};
  g.edges = {{0, 0}};
  g.vertex_groups[0] = Presentation({"a"});
  g.edge_groups = {{{power(0, 1), power(0, 2)}}};
  auto p = gog_presentation(g);
  EXPECT_EQ(p.generator_count(), 2u);
  EXPECT_EQ(abelianization(p).to_string(), "Z");
  EXPECT_EQ(count_homs(p, groups::by_name("Z3")), support::brute_force_homs(p, groups::by_name("Z3")));
  EXPECT_EQ(fingerprint(kill_inertia(g), kPanel), free_group_fingerprint(1, kPanel));
}

TEST(GraphOfGroups, TrivialGroupsGiveTheGraphGroup) {
  GraphOfGroups theta;
  theta.vertices = {0, 1};
  theta.edges = {{0, 1}, {0, 1}, {1, 0}};
  EXPECT_EQ(theta.graph_rank(), 2u);
  EXPECT_EQ(fingerprint(gog_presentation(theta), kPanel), free_group_fingerprint(2, kPanel));
}

TEST(GraphOfGroups, ValidationErrors) {
  GraphOfGroups g = segment(cyclic_presentation(2), cyclic_presentation(3));
  g.edge_groups = {{{power(1, 1), Word{}}}};
  EXPECT_THROW(g.validate(), InvariantError);
  GraphOfGroups apart;
  apart.vertices = {0, 1};
  EXPECT_THROW(apart.validate(), PreconditionError);
  GraphOfGroups dup;
  dup.vertices = {0, 0};
  EXPECT_THROW(dup.validate(), InvariantError);
  GraphOfGroups dangling;
  dangling.vertices = {0};
  dangling.edges = {{0, 4}};
  EXPECT_THROW(dangling.validate(), InvariantError);
}

TEST(GraphOfGroups, SpanningTreeShape) {
  for (auto seed : support::kSeeds) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
      auto g = support::random_graph_of_groups(rng);
      for (auto s : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{seed + i}}) {
        auto tree = gog_spanning_tree(g, s);
        EXPECT_EQ(tree.size(), g.vertices.size() - 1);
        for (auto e : tree)
          EXPECT_NE(g.edges[e].first, g.edges[e].second);
      }
    }
  }
}

TEST(KillInertia, BassFormulaOnRandomGraphs) {
  for (auto seed : support::kSeeds) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
      auto g = support::random_graph_of_groups(rng);
      auto k = kill_inertia(g);
      auto a = abelianization(k);
      EXPECT_EQ(a.free_rank, g.graph_rank());
      EXPECT_TRUE(a.torsion.empty());
      EXPECT_EQ(fingerprint(k, kPanel), free_group_fingerprint(g.graph_rank(), kPanel));
      if (k.generator_count() <= 16) {
        HomCaps wide{16, 24};
        EXPECT_EQ(count_homs(k, groups::by_name("Z2"), wide), support::brute_force_homs(k, groups::by_name("Z2")));
      }
    }
  }
}

TEST(GogPresentation, TreeChoiceDoesNotMatter) {
  for (auto seed : support::kSeeds) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10; ++i) {
      auto g = support::random_graph_of_groups(rng, 4, 6);
      FingerprintOptions opt;
      opt.caps.max_generators = 8;
      const auto panel = groups::panel_from_names({"Z2", "Z3", "Z2xZ2", "S3"});
      auto bfs = fingerprint(gog_presentation(g), panel, opt);
      EXPECT_EQ(bfs, fingerprint(gog_presentation(g, seed * 31 + i), panel, opt));
    }
  }
}
