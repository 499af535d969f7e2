#include "morpheval/percent.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace morpheval {
namespace {

TEST(RoundedRatioTest, RoundsHalfUp) {
  EXPECT_EQ(RoundedPercent(1, 8).str(), "12.50");
  EXPECT_EQ(RoundedPercent(2, 3).str(), "66.67");
  EXPECT_EQ(RoundedPercent(1, 3).str(), "33.33");
  EXPECT_EQ(RoundedPercent(1, 20000).str(), "0.01");  // exactly 0.005
  EXPECT_EQ(RoundedPercent(1, 20001).str(), "0.00");
  EXPECT_EQ(RoundedRatio(12, 7).str(), "1.71");
}

TEST(RoundedRatioTest, ZeroDenominatorIsZero) {
  EXPECT_EQ(RoundedPercent(0, 0).hundredths, 0);
  EXPECT_EQ(RoundedRatio(5, 0).str(), "0.00");
}

TEST(RoundedRatioTest, MatchesIntegerReference) {
  for (std::uint64_t den = 1; den <= 300; ++den) {
    for (std::uint64_t num = 0; num <= den; ++num) {
      ASSERT_EQ(RoundedPercent(num, den).hundredths, oracle::HalfUpHundredths(num, den, 100))
          << num << "/" << den;
    }
  }
}

TEST(RoundedRatioTest, LargeValuesDoNotOverflow) {
  EXPECT_EQ(RoundedPercent(1'000'000'000'000ULL, 2'000'000'000'000ULL).str(), "50.00");
}

TEST(Fixed2Test, FormatsTwoDecimals) {
  EXPECT_EQ(Fixed2{0}.str(), "0.00");
  EXPECT_EQ(Fixed2{5}.str(), "0.05");
  EXPECT_EQ(Fixed2{10000}.str(), "100.00");
  EXPECT_DOUBLE_EQ(Fixed2{9016}.value(), 90.16);
}

TEST(PercentTest, Unrounded) {
  EXPECT_DOUBLE_EQ(Percent(1, 4), 25.0);
  EXPECT_DOUBLE_EQ(Percent(1, 0), 0.0);
}

}  // namespace
}  // namespace morpheval
