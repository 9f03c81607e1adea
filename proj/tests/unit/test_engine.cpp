#include <gtest/gtest.h>

#include <whanoi/engine.hpp>
#include <whanoi/errors.hpp>
#include <whanoi/sequences.hpp>

#include "support/generators.hpp"

namespace whanoi::engine {
namespace {

constexpr Branch O = Branch::OneLdm;
constexpr Branch T = Branch::TwoLdm;
constexpr Branch X = Branch::Tie;

CostVector triple(long a, long b, long c) { return {Cost(a), Cost(b), Cost(c)}; }

TEST(DpSolve, ClassicalWeightsGiveMersenne) {
  const auto r = dp_solve(WeightTable::constant(Cost(1), Cost(1), Cost(1)), 20);
  for (long n = 0; n <= 20; ++n) {
    const Cost m(mersenne(n));
    EXPECT_EQ(r.levels[static_cast<std::size_t>(n)], CostVector(m, m, m));
  }
  EXPECT_EQ(r.discs(), 20u);
  EXPECT_EQ(r.trace.levels(), 20u);
}

TEST(DpSolve, HeavyMiddleSwitchesMiddleComponentToTwoLdm) {
  const auto r = dp_solve(WeightTable::constant(Cost(1), Cost(3), Cost(1)), 2);
  EXPECT_EQ(r.final(), triple(4, 5, 4));
  EXPECT_EQ(r.trace, BranchTrace({{O, T, O}, {O, O, O}}));
}

TEST(DpSolve, ExactTiesAreRecorded) {
  // (1, 2, 1) at level 0: middle one-LDM 2, two-LDM 1 + 1 = 2.
  const auto r = dp_solve(WeightTable::constant(Cost(1), Cost(2), Cost(1)), 1);
  EXPECT_EQ(r.trace.at(0, Peg{1}), X);
  EXPECT_EQ(r.trace.at(0, Peg{0}), O);
}

TEST(DpSolve, ZeroDiscsIsZero) {
  const auto r = dp_solve(WeightTable::constant(Cost(1), Cost(1), Cost(1)), 0);
  EXPECT_EQ(r.final(), triple(0, 0, 0));
  EXPECT_EQ(r.trace.levels(), 0u);
}

TEST(DpSolve, LinearVariantIsFinite) {
  const auto r = dp_solve(WeightTable::constant(Cost(1), Cost::infinity(), Cost(1)), 2);
  EXPECT_EQ(r.final(), triple(4, 8, 4));
}

TEST(DpSolve, TwoForbiddenTypesAreUnsolvable) {
  const auto w = WeightTable::constant(Cost::infinity(), Cost::infinity(), Cost(1));
  EXPECT_THROW(dp_solve(w, 2), UnsolvableError);
  const auto one = dp_solve(w, 1);
  EXPECT_TRUE(one.final()[0].is_infinite());
  EXPECT_EQ(one.final()[2], Cost(1));
}

TEST(DpSolve, ShortTableIsRejected) {
  const auto w = WeightTable::from_rows({{Cost(1), Cost(1), Cost(1)}});
  EXPECT_NO_THROW(dp_solve(w, 1));
  EXPECT_THROW(dp_solve(w, 2), std::out_of_range);
}

TEST(Plan, ClassicalPlanHasMersenneLength) {
  const auto w = WeightTable::constant(Cost(1), Cost(1), Cost(1));
  const MovePlan plan = reconstruct_plan(w, 5, Peg{0}, Peg{2}, TiePolicy::OneLdm);
  EXPECT_EQ(plan.size(), 31u);
  const auto replay = plan_cost(w, plan, State::perfect(5, Peg{0}));
  EXPECT_EQ(replay.total, Cost(31));
  EXPECT_EQ(replay.final_state, State::perfect(5, Peg{2}));
  EXPECT_EQ(ldm_counts(plan, 5), (std::vector<std::size_t>{16, 8, 4, 2, 1}));
}

TEST(Plan, TwoLdmMovesLargestDiscTwice) {
  const auto w = WeightTable::constant(Cost(1), Cost(100), Cost(1));
  const MovePlan plan = reconstruct_plan(w, 3, Peg{0}, Peg{2}, TiePolicy::OneLdm);
  EXPECT_EQ(ldm_counts(plan, 3).back(), 2u);
  EXPECT_EQ(plan_cost(w, plan, State::perfect(3, Peg{0})).total, dp_solve(w, 3).final()[1]);
}

TEST(Plan, TiePolicyPicksTheBranch) {
  const auto w = WeightTable::constant(Cost(1), Cost(2), Cost(1));
  const MovePlan one = reconstruct_plan(w, 1, Peg{0}, Peg{2}, TiePolicy::OneLdm);
  const MovePlan two = reconstruct_plan(w, 1, Peg{0}, Peg{2}, TiePolicy::TwoLdm);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(plan_cost(w, one, State::perfect(1, Peg{0})).total, plan_cost(w, two, State::perfect(1, Peg{0})).total);
}

TEST(Plan, StreamMatchesMaterializedPlan) {
  testing::Gen gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = WeightTable::from_rows(gen.rows(7));
    for (TiePolicy ties : {TiePolicy::OneLdm, TiePolicy::TwoLdm}) {
      const MovePlan plan = reconstruct_plan(w, 7, Peg{2}, Peg{1}, ties);
      PlanStream stream = stream_plan(w, 7, Peg{2}, Peg{1}, ties);
      MovePlan streamed;
      while (auto m = stream.next()) streamed.moves.push_back(*m);
      EXPECT_EQ(streamed, plan);
      EXPECT_EQ(plan_cost(w, plan, State::perfect(7, Peg{2})).total, dp_solve(w, 7).final()[0]);
    }
  }
}

TEST(Plan, CapAndUnsolvableErrors) {
  const auto w = WeightTable::constant(Cost(1), Cost(1), Cost(1));
  EXPECT_THROW(reconstruct_plan(w, 21, Peg{0}, Peg{2}, TiePolicy::OneLdm), CapExceededError);
  EXPECT_NO_THROW(reconstruct_plan(w, 3, Peg{0}, Peg{2}, TiePolicy::OneLdm, 3));
  const auto one_move = WeightTable::constant(Cost::infinity(), Cost::infinity(), Cost(1));
  EXPECT_THROW(stream_plan(one_move, 1, Peg{1}, Peg{2}, TiePolicy::OneLdm), UnsolvableError);
}

TEST(PlanCost, ReportsFirstIllegalStep) {
  const auto w = WeightTable::constant(Cost(1), Cost::infinity(), Cost(1));
  MovePlan bad{{{1, Peg{0}, Peg{1}}, {2, Peg{0}, Peg{1}}}};
  try {
    plan_cost(w, bad, State::perfect(2, Peg{0}));
    FAIL() << "expected IllegalMoveError";
  } catch (const IllegalMoveError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
  MovePlan forbidden{{{1, Peg{0}, Peg{2}}}};
  EXPECT_THROW(plan_cost(w, forbidden, State::perfect(1, Peg{0})), IllegalMoveError);
}

TEST(Phase, ThresholdWeightShowsTieThenSwitch) {
  const auto report = detect_phase(WeightTable::constant(Cost(1), Cost(18), Cost(1)), 8);
  const auto& middle = report.pegs[1];
  EXPECT_EQ(middle.ties, std::vector<std::size_t>{2});
  EXPECT_EQ(middle.transitions, std::vector<std::size_t>{3});
  EXPECT_TRUE(report.pegs[0].transitions.empty());
  EXPECT_TRUE(report.pegs[0].ties.empty());
}

}  // namespace
}  // namespace whanoi::engine
