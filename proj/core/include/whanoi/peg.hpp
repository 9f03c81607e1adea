#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace whanoi {

/// One of the three pegs {0, 1, 2}.
class Peg {
 public:
  constexpr explicit Peg(int index) : index_(checked(index)) {}

  [[nodiscard]] constexpr int index() const noexcept { return index_; }

  friend constexpr bool operator==(Peg, Peg) = default;
  friend constexpr auto operator<=>(Peg, Peg) = default;

 private:
  static constexpr std::uint8_t checked(int index) {
    if (index < 0 || index > 2) {
      throw std::out_of_range("peg index must be 0, 1 or 2, got " + std::to_string(index));
    }
    return static_cast<std::uint8_t>(index);
  }

  std::uint8_t index_;
};

inline constexpr std::array<Peg, 3> kPegs{Peg{0}, Peg{1}, Peg{2}};

/// The peg not involved in a move between `a` and `b`.
constexpr Peg idle_peg(Peg a, Peg b) {
  if (a == b) {
    throw std::invalid_argument("a move needs two distinct pegs");
  }
  return Peg{3 - a.index() - b.index()};
}

/// The two pegs other than `idle`, in increasing order.
constexpr std::array<Peg, 2> outer_pegs(Peg idle) {
  switch (idle.index()) {
    case 0: return {Peg{1}, Peg{2}};
    case 1: return {Peg{0}, Peg{2}};
    default: return {Peg{0}, Peg{1}};
  }
}

Peg parse_peg(const std::string& text);

}  // namespace whanoi
