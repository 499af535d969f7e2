#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

TEST(MetricsOracleTest, MatchesBruteForceReferences) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_EQ(prop::MetricsAgreeWithOracle(seed), "");
  }
}

TEST(MetricsOracleTest, CoherenceRowsSumTo100) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_EQ(prop::CoherencePartitionsTo100(seed), "");
  }
}

TEST(MetricsOracleTest, ErrorProfilePartitionsGold) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_EQ(prop::ErrorsPartitionGold(seed), "");
  }
}

}  // namespace
