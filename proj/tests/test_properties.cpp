#include <gtest/gtest.h>

#include "properties.hpp"

class Properties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Properties, BasepointIndependence) { EXPECT_EQ(properties::basepoint_independence(GetParam()), properties::Failures{}); }

TEST_P(Properties, ConeConsistency) { EXPECT_EQ(properties::cone_consistency(GetParam()), properties::Failures{}); }

TEST_P(Properties, Center2Invariance) { EXPECT_EQ(properties::center2_invariance(GetParam()), properties::Failures{}); }

TEST_P(Properties, SpanningTreeInvariance) {
  EXPECT_EQ(properties::spanning_tree_invariance(GetParam()), properties::Failures{});
}

TEST_P(Properties, RelabelingInvariance) {
  EXPECT_EQ(properties::relabeling_invariance(GetParam()), properties::Failures{});
}

TEST_P(Properties, TietzeCompatibility) {
  EXPECT_EQ(properties::tietze_compatibility(GetParam()), properties::Failures{});
}

TEST_P(Properties, SnfPermutationInvariance) {
  EXPECT_EQ(properties::snf_permutation_invariance(GetParam()), properties::Failures{});
}

INSTANTIATE_TEST_SUITE_P(Seeds, Properties, ::testing::ValuesIn(support::kSeeds));
