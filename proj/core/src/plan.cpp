#include "whanoi/engine.hpp"

#include <string>

#include "whanoi/errors.hpp"

namespace whanoi::engine {

PlanStream::PlanStream(BranchTrace trace, std::size_t discs, Peg from, Peg to, TiePolicy ties)
    : trace_(std::move(trace)), ties_(ties) {
  if (discs > trace_.levels()) {
    throw std::invalid_argument("branch trace is shorter than the requested tower");
  }
  if (from == to) {
    throw std::invalid_argument("plan endpoints must be distinct pegs");
  }
  stack_.reserve(discs + 1);
  push(static_cast<unsigned>(discs), from, to);
}

void PlanStream::push(unsigned discs, Peg from, Peg to) {
  if (discs == 0) return;
  const Branch b = trace_.at(discs - 1, idle_peg(from, to));
  const bool two = b == Branch::TwoLdm || (b == Branch::Tie && ties_ == TiePolicy::TwoLdm);
  stack_.push_back({discs, from, to, two, 0});
}

std::optional<Move> PlanStream::next() {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const unsigned sub = f.discs - 1;
    const Peg from = f.from;
    const Peg to = f.to;
    const Peg idle = idle_peg(from, to);

    if (!f.two_ldm) {
      // smaller tower to the idle peg, largest disc across, tower back on top
      switch (f.stage++) {
        case 0: push(sub, from, idle); break;
        case 1: return Move{f.discs, from, to};
        case 2: push(sub, idle, to); break;
        default: stack_.pop_back(); break;
      }
    } else {
      // largest disc visits the idle peg; the smaller tower crosses three times
      switch (f.stage++) {
        case 0: push(sub, from, to); break;
        case 1: return Move{f.discs, from, idle};
        case 2: push(sub, to, from); break;
        case 3: return Move{f.discs, idle, to};
        case 4: push(sub, from, to); break;
        default: stack_.pop_back(); break;
      }
    }
  }
  return std::nullopt;
}

PlanStream stream_plan(const WeightTable& weights, std::size_t n, Peg from, Peg to, TiePolicy ties) {
  DpResult dp = dp_solve(weights, n);
  if (from != to && dp.final()[idle_peg(from, to)].is_infinite()) {
    throw UnsolvableError("no finite-cost transfer from peg " + std::to_string(from.index()) + " to peg " +
                          std::to_string(to.index()));
  }
  return PlanStream(std::move(dp.trace), n, from, to, ties);
}

MovePlan reconstruct_plan(const WeightTable& weights, std::size_t n, Peg from, Peg to, TiePolicy ties,
                          std::size_t max_discs) {
  if (n > max_discs) {
    throw CapExceededError("a " + std::to_string(n) + "-disc plan has at least 2^" + std::to_string(n) +
                           "-1 moves, above the materialization cap of " + std::to_string(max_discs) +
                           " discs; use the streaming plan instead");
  }
  PlanStream stream = stream_plan(weights, n, from, to, ties);
  MovePlan plan;
  while (auto move = stream.next()) plan.moves.push_back(*move);
  return plan;
}

PlanCost plan_cost(const WeightTable& weights, const MovePlan& plan, const State& start) {
  PlanCost out{Cost{}, start};
  for (std::size_t step = 0; step < plan.moves.size(); ++step) {
    const Move& m = plan.moves[step];
    if (!out.final_state.can_apply(m)) {
      throw IllegalMoveError(step, "disc " + std::to_string(m.disc) + " cannot move from peg " +
                                       std::to_string(m.from.index()) + " to peg " + std::to_string(m.to.index()));
    }
    const Cost w = weights.at(m.disc - 1, idle_peg(m.from, m.to));
    if (w.is_infinite()) {
      throw IllegalMoveError(step, "move type of disc " + std::to_string(m.disc) + " is forbidden");
    }
    out.total += w;
    out.final_state.apply(m);
  }
  return out;
}

std::vector<std::size_t> ldm_counts(const MovePlan& plan, std::size_t discs) {
  std::vector<std::size_t> counts(discs, 0);
  for (const Move& m : plan.moves) {
    if (m.disc == 0 || m.disc > discs) {
      throw std::out_of_range("plan moves disc " + std::to_string(m.disc) + " of a " + std::to_string(discs) +
                              "-disc tower");
    }
    ++counts[m.disc - 1];
  }
  return counts;
}

}  // namespace whanoi::engine
