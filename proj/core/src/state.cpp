#include "whanoi/state.hpp"

#include <stdexcept>
#include <string>

namespace whanoi {

std::uint64_t state_count(std::size_t discs) {
  if (discs > 40) {
    throw std::length_error("3^" + std::to_string(discs) + " states do not fit in 64 bits");
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < discs; ++i) count *= 3;
  return count;
}

State State::perfect(std::size_t discs, Peg peg) { return State(std::vector<Peg>(discs, peg)); }

State State::decode(std::uint64_t code, std::size_t discs) {
  if (code >= state_count(discs)) {
    throw std::out_of_range("state code out of range");
  }
  std::vector<Peg> pegs;
  pegs.reserve(discs);
  for (std::size_t m = 0; m < discs; ++m) {
    pegs.emplace_back(static_cast<int>(code % 3));
    code /= 3;
  }
  return State(std::move(pegs));
}

std::uint64_t State::encode() const {
  std::uint64_t code = 0;
  for (auto it = peg_of_.rbegin(); it != peg_of_.rend(); ++it) {
    code = code * 3 + static_cast<std::uint64_t>(it->index());
  }
  return code;
}

unsigned State::top(Peg peg) const noexcept {
  for (std::size_t m = 0; m < peg_of_.size(); ++m) {
    if (peg_of_[m] == peg) return static_cast<unsigned>(m + 1);
  }
  return 0;
}

bool State::can_apply(const Move& move) const noexcept {
  if (move.disc == 0 || move.disc > peg_of_.size() || move.from == move.to) return false;
  if (peg_of_[move.disc - 1] != move.from) return false;
  if (top(move.from) != move.disc) return false;
  const unsigned target_top = top(move.to);
  return target_top == 0 || target_top > move.disc;
}

void State::apply(const Move& move) {
  if (!can_apply(move)) {
    throw std::invalid_argument("illegal move of disc " + std::to_string(move.disc));
  }
  peg_of_[move.disc - 1] = move.to;
}

}  // namespace whanoi
