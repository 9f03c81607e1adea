#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include <whanoi/engine.hpp>
#include <whanoi/errors.hpp>
#include <whanoi/models.hpp>
#include <whanoi/oracle.hpp>

namespace whanoi::oracle {
namespace {

const WeightTable kUnit = WeightTable::constant(Cost(1), Cost(1), Cost(1));

TEST(Neighbors, OnlySmallestDiscMovesFromPerfectState) {
  const auto edges = neighbors(State::perfect(3, Peg{0}), kUnit);
  ASSERT_EQ(edges.size(), 2u);
  for (const auto& e : edges) {
    EXPECT_EQ(e.move.disc, 1u);
    EXPECT_EQ(e.cost, Cost(1));
  }
}

TEST(Neighbors, SingleDiscHasTwoMoves) {
  EXPECT_EQ(neighbors(State::perfect(1, Peg{0}), WeightTable::constant(Cost(3), Cost(9), Cost(4))).size(), 2u);
}

TEST(Neighbors, ForbiddenEdgesAreOmitted) {
  const auto lth = models::lower(models::ForbiddenMiddle{models::Polynomial{1}});
  const auto edges = neighbors(State::perfect(2, Peg{0}), lth);
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].move, (Move{1, Peg{0}, Peg{1}}));
  EXPECT_EQ(edges[0].cost, lth.at(0, Peg{2}));
}

TEST(Neighbors, InteriorStatesHaveThreeMoves) {
  // Discs on three different pegs: every pair has a movable disc.
  EXPECT_EQ(neighbors(State({Peg{0}, Peg{1}, Peg{2}}), kUnit).size(), 3u);
}

TEST(Dijkstra, ClassicalTransferCostsSeven) {
  const auto r = dijkstra(kUnit, 3, State::perfect(3, Peg{0}), State::perfect(3, Peg{2}));
  EXPECT_EQ(r.cost, Cost(7));
  EXPECT_EQ(r.plan.size(), 7u);
  EXPECT_EQ(engine::plan_cost(kUnit, r.plan, State::perfect(3, Peg{0})).final_state, State::perfect(3, Peg{2}));
}

TEST(Dijkstra, HeavyMiddleExample) {
  const auto w = WeightTable::constant(Cost(1), Cost(2), Cost(1));
  EXPECT_EQ(dijkstra(w, 2, State::perfect(2, Peg{0}), State::perfect(2, Peg{1})).cost, Cost(4));
}

TEST(Dijkstra, WitnessIsDeterministicAndOptimal) {
  const auto w = WeightTable::constant(Cost(1), Cost(2), Cost(1));
  const auto a = dijkstra(w, 5, State::perfect(5, Peg{0}), State::perfect(5, Peg{2}));
  const auto b = dijkstra(w, 5, State::perfect(5, Peg{0}), State::perfect(5, Peg{2}));
  EXPECT_EQ(a.plan, b.plan);
  EXPECT_EQ(engine::plan_cost(w, a.plan, State::perfect(5, Peg{0})).total, a.cost);
}

TEST(Dijkstra, ArbitraryEndpoints) {
  const State from({Peg{2}, Peg{0}, Peg{1}});
  const State to({Peg{1}, Peg{1}, Peg{0}});
  const auto r = dijkstra(kUnit, 3, from, to);
  EXPECT_EQ(engine::plan_cost(kUnit, r.plan, from).final_state, to);
  EXPECT_TRUE(dijkstra(kUnit, 3, from, from).plan.empty());
}

TEST(Dijkstra, CapAndDisconnection) {
  EXPECT_THROW(dijkstra(kUnit, 11, State::perfect(11, Peg{0}), State::perfect(11, Peg{2})), CapExceededError);
  const auto one_type = WeightTable::constant(Cost::infinity(), Cost::infinity(), Cost(1));
  EXPECT_THROW(dijkstra(one_type, 2, State::perfect(2, Peg{0}), State::perfect(2, Peg{1})), DisconnectedError);
  EXPECT_THROW(dijkstra(kUnit, 2, State::perfect(3, Peg{0}), State::perfect(2, Peg{1})), std::invalid_argument);
}

TEST(OracleVector, MatchesDpOnLinearVariant) {
  const auto lth = models::lower(models::ForbiddenMiddle{models::Polynomial{1}});
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(oracle_cost_vector(lth, n), engine::dp_solve(lth, n).final());
}

TEST(PathCounts, ClassicalTransferIsUnique) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto c = count_shortest_paths(kUnit, n, State::perfect(n, Peg{0}), State::perfect(n, Peg{2}));
    EXPECT_FALSE(c.unbounded);
    EXPECT_EQ(c.count, 1);
  }
}

TEST(PathCounts, TiesMultiplyPaths) {
  // (1, 2, 1), one disc from 0 to 2: direct (cost 2) or via peg 1 (1 + 1).
  const auto w = WeightTable::constant(Cost(1), Cost(2), Cost(1));
  EXPECT_EQ(count_shortest_paths(w, 1, State::perfect(1, Peg{0}), State::perfect(1, Peg{2})).count, 2);
}

TEST(PathCounts, ZeroCostMovesMakeCountUnbounded) {
  const auto w = models::lower(models::CheapIdleMassive{});
  const auto c = count_shortest_paths(w, 2, State::perfect(2, Peg{0}), State::perfect(2, Peg{1}));
  EXPECT_TRUE(c.unbounded);
  EXPECT_EQ(c.count, 0);
}

TEST(ExportCsv, ListsEachEdgeOnce) {
  std::ostringstream os;
  export_edges_csv(os, kUnit, 2);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "u,v,disc,idle,cost");
  std::set<std::string> seen;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++count;
    EXPECT_TRUE(seen.insert(line).second);
  }
  // The Hanoi graph on n discs has 3(3^n - 1)/2 edges.
  EXPECT_EQ(count, 12u);
}

}  // namespace
}  // namespace whanoi::oracle
