#include <gtest/gtest.h>

#include <sstream>

#include <whanoi/cost.hpp>

#include "support/generators.hpp"

namespace whanoi {
namespace {

TEST(Cost, ParsesIntegersFractionsAndInfinity) {
  EXPECT_EQ(Cost::parse("7"), Cost(7));
  EXPECT_EQ(Cost::parse("6/4"), Cost(Rational(3, 2)));
  EXPECT_TRUE(Cost::parse("inf").is_infinite());
  EXPECT_EQ(Cost::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Cost::infinity().to_string(), "inf");
}

TEST(Cost, RejectsMalformedOrNegative) {
  EXPECT_THROW(Cost::parse("-1"), std::domain_error);
  EXPECT_ANY_THROW(Cost::parse("1/0"));
  EXPECT_ANY_THROW(Cost::parse("abc"));
  EXPECT_ANY_THROW(Cost::parse(""));
  EXPECT_THROW(Cost(-3L), std::domain_error);
}

TEST(Cost, InfinityAbsorbsAddition) {
  EXPECT_TRUE((Cost(4) + Cost::infinity()).is_infinite());
  EXPECT_TRUE((Cost::infinity() + Cost::infinity()).is_infinite());
  EXPECT_EQ(Cost(Rational(1, 2)) + Cost(Rational(1, 3)), Cost(Rational(5, 6)));
}

TEST(Cost, ScalingTreatsZeroTimesInfinityAsZero) {
  EXPECT_TRUE((0L * Cost::infinity()).is_zero());
  EXPECT_TRUE((3L * Cost::infinity()).is_infinite());
  EXPECT_EQ(3L * Cost(Rational(2, 3)), Cost(2));
  EXPECT_THROW(-1L * Cost(1), std::domain_error);
}

TEST(Cost, OrderingPlacesInfinityLast) {
  EXPECT_LT(Cost(1000000), Cost::infinity());
  EXPECT_LT(Cost(Rational(1, 3)), Cost(Rational(1, 2)));
  EXPECT_EQ(Cost::infinity(), Cost::infinity());
  EXPECT_FALSE(Cost::infinity() < Cost::infinity());
}

TEST(Cost, MinReportsSideAndExactTies) {
  EXPECT_EQ(cost_min(Cost(1), Cost(2)).side, MinSide::Left);
  EXPECT_EQ(cost_min(Cost(3), Cost(2)).side, MinSide::Right);
  EXPECT_EQ(cost_min(Cost(Rational(2, 4)), Cost(Rational(1, 2))).side, MinSide::Tie);
  EXPECT_EQ(cost_min(Cost::infinity(), Cost::infinity()).side, MinSide::Tie);
  EXPECT_EQ(cost_min(Cost(5), Cost::infinity()).value, Cost(5));
}

TEST(Cost, StreamsExactText) {
  std::ostringstream os;
  os << Cost(Rational(10, 4)) << ' ' << Cost::infinity();
  EXPECT_EQ(os.str(), "5/2 inf");
}

TEST(Cost, RationalTextRoundTrips) {
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(rational_to_string(Rational(-6, 4)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(CostProperty, AdditionIsMonotoneAndCommutative) {
  testing::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Cost a = gen.cost(0.1);
    const Cost b = gen.cost(0.1);
    const Cost c = gen.cost(0.1);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    if (a <= b) {
      EXPECT_LE(a + c, b + c);
    }
    EXPECT_EQ(Cost::parse(a.to_string()), a);
  }
}

}  // namespace
}  // namespace whanoi
