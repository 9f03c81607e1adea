#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "whanoi/linalg.hpp"
#include "whanoi/state.hpp"
#include "whanoi/weights.hpp"

namespace whanoi::engine {

/// Which branch of the two-strategy recurrence attains the minimum.
enum class Branch { OneLdm, TwoLdm, Tie };

std::string_view branch_name(Branch b);

/// Branch per level (0..n-1) and idle peg. Level m records how the
/// (m+1)-tower costs were obtained from the m-tower costs.
class BranchTrace {
 public:
  BranchTrace() = default;
  explicit BranchTrace(std::vector<std::array<Branch, 3>> rows) : rows_(std::move(rows)) {}

  [[nodiscard]] std::size_t levels() const noexcept { return rows_.size(); }
  [[nodiscard]] Branch at(std::size_t level, Peg idle) const { return rows_.at(level)[idle.index()]; }
  [[nodiscard]] const std::vector<std::array<Branch, 3>>& rows() const noexcept { return rows_; }

  void push(const std::array<Branch, 3>& row) { rows_.push_back(row); }

  friend bool operator==(const BranchTrace&, const BranchTrace&) = default;

 private:
  std::vector<std::array<Branch, 3>> rows_;
};

struct DpResult {
  std::vector<CostVector> levels;  ///< d_0 .. d_n
  BranchTrace trace;

  [[nodiscard]] const CostVector& final() const { return levels.back(); }
  [[nodiscard]] std::size_t discs() const noexcept { return levels.size() - 1; }
};

/// Exact minimal transfer costs for every tower size 0..n by the two-branch
/// min-plus recurrence, starting from d_0 = (0, 0, 0).
///
/// Throws UnsolvableError when n >= 2 and some level forbids two or more move
/// types (a single usable edge type can transfer one disc at most).
DpResult dp_solve(const WeightTable& weights, std::size_t n);

enum class TiePolicy { OneLdm, TwoLdm };

inline constexpr std::size_t kDefaultPlanCap = 20;

/// Lazily emits the moves of an optimal transfer, depth-first. Memory is
/// O(n) regardless of plan length.
class PlanStream {
 public:
  PlanStream(BranchTrace trace, std::size_t discs, Peg from, Peg to, TiePolicy ties);

  std::optional<Move> next();

 private:
  struct Frame {
    unsigned discs;
    Peg from;
    Peg to;
    bool two_ldm;
    int stage;
  };

  void push(unsigned discs, Peg from, Peg to);

  BranchTrace trace_;
  TiePolicy ties_;
  std::vector<Frame> stack_;
};

/// Optimal plan streamed from the DP trace; throws UnsolvableError if the
/// transfer has infinite cost.
PlanStream stream_plan(const WeightTable& weights, std::size_t n, Peg from, Peg to, TiePolicy ties);

/// Materialized optimal plan. Throws CapExceededError above `max_discs`
/// (use stream_plan for larger towers).
MovePlan reconstruct_plan(const WeightTable& weights, std::size_t n, Peg from, Peg to, TiePolicy ties,
                          std::size_t max_discs = kDefaultPlanCap);

struct PlanCost {
  Cost total;
  State final_state;
};

/// Replays `plan` from `start`, summing w(disc-1, idle) per move. Throws
/// IllegalMoveError naming the first illegal or forbidden step.
PlanCost plan_cost(const WeightTable& weights, const MovePlan& plan, const State& start);

/// Number of moves of each disc; index m counts disc m+1.
std::vector<std::size_t> ldm_counts(const MovePlan& plan, std::size_t discs);

struct PegPhase {
  /// Levels whose (non-tie) branch differs from the previous non-tie level.
  std::vector<std::size_t> transitions;
  std::vector<std::size_t> ties;
};

struct PhaseReport {
  BranchTrace trace;
  std::array<PegPhase, 3> pegs;
};

PhaseReport detect_phase(const WeightTable& weights, std::size_t n_max);

}  // namespace whanoi::engine
