#include <gtest/gtest.h>

#include <whanoi/engine.hpp>
#include <whanoi/errors.hpp>
#include <whanoi/linalg.hpp>
#include <whanoi/models.hpp>
#include <whanoi/sequences.hpp>

#include "support/generators.hpp"

namespace whanoi {
namespace {

using linalg::Mat3;

TEST(Mat3, ClosedPowersMatchRepeatedSquaring) {
  for (unsigned n = 0; n <= 12; ++n) {
    EXPECT_EQ(linalg::mat_a_power(n), linalg::mat_power_generic(linalg::one_ldm_operator(), n)) << n;
    EXPECT_EQ(linalg::mat_b_power(n), linalg::mat_power_generic(linalg::forbidden_operator(), n)) << n;
  }
}

TEST(Mat3, PowerEntriesAreJacobsthalAndHalf3) {
  for (unsigned n = 0; n <= 20; ++n) {
    const Mat3 a = linalg::mat_a_power(n);
    const Mat3 b = linalg::mat_b_power(n);
    EXPECT_EQ(a.at(0, 0), jacobsthal_diff(n));
    EXPECT_EQ(a.at(1, 2), jacobsthal(n));
    EXPECT_EQ(b.at(1, 1), pow3(n));
    EXPECT_EQ(b.at(0, 1), half3(n));
    EXPECT_EQ(b.at(0, 2), parity(n));
    EXPECT_EQ(b.at(1, 0), 0);
  }
}

TEST(Mat3, ArithmeticBasics) {
  const Mat3 a = linalg::one_ldm_operator();
  EXPECT_EQ(a + Mat3::identity(), Mat3::all_ones());
  EXPECT_EQ(Integer(2) * Mat3::identity(), Mat3::identity() + Mat3::identity());
  const CostVector v = a.apply({Cost(1), Cost(2), Cost(3)});
  EXPECT_EQ(v, CostVector(Cost(5), Cost(4), Cost(3)));
}

// The one-LDM recurrence summed in closed form gives |w| l_{n-1} + c_n w.
TEST(OneLdm, ConstantWeightGridMatchesClosedForm) {
  for (long w0 = 0; w0 <= 4; ++w0) {
    for (long w1 = 0; w1 <= 4; ++w1) {
      for (long w2 = 0; w2 <= 4; ++w2) {
        const WeightRow row{Cost(w0), Cost(w1), Cost(w2)};
        const auto weights = WeightTable::constant(row);
        for (std::size_t n = 0; n <= 12; ++n) {
          EXPECT_EQ(linalg::solve_one_ldm({}, weights, n), models::nonmassive_closed(row, n))
              << w0 << w1 << w2 << " n=" << n;
        }
      }
    }
  }
}

TEST(OneLdm, MatrixPowersSumToTheSolver) {
  testing::Gen gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rows = gen.rows(10);
    const auto weights = WeightTable::from_rows(rows);
    CostVector sum(Cost{}, Cost{}, Cost{});
    const std::size_t n = 10;
    for (std::size_t v = 0; v < n; ++v) {
      const WeightRow& r = rows[n - 1 - v];
      const CostVector term = linalg::mat_a_power(static_cast<unsigned>(v)).apply({r[0], r[1], r[2]});
      for (std::size_t i = 0; i < 3; ++i) sum[i] += term[i];
    }
    EXPECT_EQ(linalg::solve_one_ldm({}, weights, n), sum);
  }
}

TEST(TwoLdm, ConstantWeightsScaleByHalf3) {
  const auto weights = WeightTable::constant(Cost(1), Cost(5), Cost(2));
  for (std::size_t n = 0; n <= 15; ++n) {
    const Integer h = half3(static_cast<long>(n));
    EXPECT_EQ(linalg::solve_two_ldm({}, weights, n), CostVector(Cost(Integer(7 * h)), Cost(Integer(3 * h)),
                                                                 Cost(Integer(6 * h))));
  }
}

TEST(Solvers, InfiniteWeightsAreInapplicable) {
  const auto weights = WeightTable::constant(Cost(1), Cost::infinity(), Cost(1));
  EXPECT_THROW(linalg::solve_one_ldm({}, weights, 2), InapplicableError);
  EXPECT_THROW(linalg::solve_two_ldm({}, weights, 2), InapplicableError);
  EXPECT_NO_THROW(linalg::solve_forbidden({}, weights, 2));
  const auto outer_forbidden = WeightTable::constant(Cost::infinity(), Cost(1), Cost(1));
  EXPECT_THROW(linalg::solve_forbidden({}, outer_forbidden, 2), InapplicableError);
}

TEST(Solvers, FirstLevelStitchesRegimes) {
  const auto weights = WeightTable::from_rows({{Cost(1), Cost(2), Cost(3)},
                                               {Cost(4), Cost(5), Cost(6)},
                                               {Cost(7), Cost(8), Cost(9)}});
  const CostVector mid = linalg::solve_one_ldm({}, weights, 2);
  EXPECT_EQ(linalg::solve_one_ldm(mid, weights, 1, 2), linalg::solve_one_ldm({}, weights, 3));
  const CostVector two = linalg::solve_two_ldm({}, weights, 1);
  EXPECT_EQ(linalg::solve_two_ldm(two, weights, 2, 1), linalg::solve_two_ldm({}, weights, 3));
}

TEST(Equivariance, SwappingOuterPegsSwapsCosts) {
  testing::Gen gen(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto weights = WeightTable::from_rows(gen.rows(9));
    const auto swapped = weights.swapped_outer();
    const auto a = engine::dp_solve(weights, 9);
    const auto b = engine::dp_solve(swapped, 9);
    for (std::size_t n = 0; n <= 9; ++n) EXPECT_EQ(a.levels[n].swapped_outer(), b.levels[n]);
  }
}

}  // namespace
}  // namespace whanoi
