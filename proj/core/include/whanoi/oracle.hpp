#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "whanoi/cost.hpp"
#include "whanoi/linalg.hpp"
#include "whanoi/state.hpp"
#include "whanoi/weights.hpp"

namespace whanoi::oracle {

/// Largest tower the graph search accepts by default (3^10 = 59049 states).
inline constexpr std::size_t kDefaultOracleCap = 10;

struct Edge {
  State target;
  Cost cost;
  Move move;
};

/// Legal single-disc moves out of `state`, skipping forbidden (infinite) ones.
std::vector<Edge> neighbors(const State& state, const WeightTable& weights);

struct ShortestPath {
  Cost cost;
  MovePlan plan;
};

/// Label-setting search over the full Hanoi graph. Ties between equal
/// labels are broken by state code, so the witness plan is deterministic.
/// Throws CapExceededError above `cap` discs and DisconnectedError when
/// `to` is unreachable.
ShortestPath dijkstra(const WeightTable& weights, std::size_t n, const State& from, const State& to,
                      std::size_t cap = kDefaultOracleCap);

/// (dist(1^n, 2^n), dist(0^n, 2^n), dist(0^n, 1^n)), component k being the
/// transfer whose idle peg is k.
CostVector oracle_cost_vector(const WeightTable& weights, std::size_t n, std::size_t cap = kDefaultOracleCap);

struct PathCount {
  Integer count;
  /// Set when a zero-cost move lies on an optimal route: such a move can be
  /// undone for free, so there are infinitely many optimal walks and `count`
  /// is left at zero.
  bool unbounded = false;
};

/// Number of minimal-cost move sequences from `from` to `to`.
PathCount count_shortest_paths(const WeightTable& weights, std::size_t n, const State& from, const State& to,
                               std::size_t cap = kDefaultOracleCap);

/// CSV edge list of the Hanoi graph: header "u,v,disc,idle,cost", then every
/// usable edge once with state codes u < v.
void export_edges_csv(std::ostream& os, const WeightTable& weights, std::size_t n,
                      std::size_t cap = kDefaultOracleCap);

}  // namespace whanoi::oracle
