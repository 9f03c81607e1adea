#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "whanoi/peg.hpp"

namespace whanoi {

/// A single disc move; discs are numbered 1..n from smallest to largest.
struct Move {
  unsigned disc;
  Peg from;
  Peg to;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MovePlan {
  std::vector<Move> moves;

  [[nodiscard]] std::size_t size() const noexcept { return moves.size(); }
  [[nodiscard]] bool empty() const noexcept { return moves.empty(); }
  friend bool operator==(const MovePlan&, const MovePlan&) = default;
};

/// Peg assignment of every disc. Discs on one peg are always stacked in size
/// order, so every assignment is a regular state and there are 3^n of them.
class State {
 public:
  State() = default;
  explicit State(std::vector<Peg> peg_of) : peg_of_(std::move(peg_of)) {}

  static State perfect(std::size_t discs, Peg peg);

  /// Base-3 code; digit m holds the peg of disc m+1.
  static State decode(std::uint64_t code, std::size_t discs);
  [[nodiscard]] std::uint64_t encode() const;

  [[nodiscard]] std::size_t discs() const noexcept { return peg_of_.size(); }
  /// Peg of 1-based disc `disc`.
  [[nodiscard]] Peg peg_of(unsigned disc) const { return peg_of_.at(disc - 1); }
  [[nodiscard]] const std::vector<Peg>& pegs() const noexcept { return peg_of_; }

  /// Smallest disc on `peg`, or 0 if the peg is empty.
  [[nodiscard]] unsigned top(Peg peg) const noexcept;

  /// True if `move` is legal in this state.
  [[nodiscard]] bool can_apply(const Move& move) const noexcept;
  void apply(const Move& move);

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<Peg> peg_of_;
};

/// 3^n, checked against 64-bit overflow.
std::uint64_t state_count(std::size_t discs);

}  // namespace whanoi
