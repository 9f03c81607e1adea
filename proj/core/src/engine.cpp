#include "whanoi/engine.hpp"

#include <string>

#include "whanoi/errors.hpp"

namespace whanoi::engine {

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::OneLdm: return "one";
    case Branch::TwoLdm: return "two";
    case Branch::Tie: return "tie";
  }
  return "?";
}

DpResult dp_solve(const WeightTable& weights, std::size_t n) {
  if (!weights.covers(n)) {
    throw std::out_of_range("weight table covers only " + std::to_string(*weights.max_disc()) +
                            " discs, asked for " + std::to_string(n));
  }
  DpResult result;
  result.levels.reserve(n + 1);
  result.levels.emplace_back(Cost{}, Cost{}, Cost{});

  for (std::size_t level = 0; level < n; ++level) {
    const WeightRow w = weights.row(level);
    int forbidden = 0;
    for (const auto& c : w) forbidden += c.is_infinite() ? 1 : 0;
    if (forbidden >= 2 && n >= 2) {
      throw UnsolvableError("disc index " + std::to_string(level) + " has " + std::to_string(forbidden) +
                            " forbidden move types; only one disc can be transferred");
    }

    const CostVector& d = result.levels.back();
    CostVector next;
    std::array<Branch, 3> row{};
    for (Peg k : kPegs) {
      const auto [i, j] = outer_pegs(k);
      const Cost one = d[i] + d[j] + w[k.index()];
      const Cost two = 3 * d[k] + w[i.index()] + w[j.index()];
      const auto [best, side] = cost_min(one, two);
      next[k] = best;
      row[k.index()] = side == MinSide::Left ? Branch::OneLdm : side == MinSide::Right ? Branch::TwoLdm : Branch::Tie;
    }
    result.levels.push_back(std::move(next));
    result.trace.push(row);
  }
  return result;
}

PhaseReport detect_phase(const WeightTable& weights, std::size_t n_max) {
  PhaseReport report;
  report.trace = dp_solve(weights, n_max).trace;
  for (Peg k : kPegs) {
    PegPhase& phase = report.pegs[k.index()];
    std::optional<Branch> last;
    for (std::size_t level = 0; level < report.trace.levels(); ++level) {
      const Branch b = report.trace.at(level, k);
      if (b == Branch::Tie) {
        phase.ties.push_back(level);
        continue;
      }
      if (last && *last != b) phase.transitions.push_back(level);
      last = b;
    }
  }
  return report;
}

}  // namespace whanoi::engine
