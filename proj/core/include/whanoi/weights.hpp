#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "whanoi/cost.hpp"
#include "whanoi/peg.hpp"

namespace whanoi {

/// Costs of disc `disc`+1 for the three idle pegs.
using WeightRow = std::array<Cost, 3>;

/// Move costs w(disc, idle): the cost of moving disc `disc`+1 (zero-based
/// `disc`) between the two pegs other than `idle`. Only the idle peg is keyed,
/// so costs are direction-independent by construction.
class WeightTable {
 public:
  using Fn = std::function<Cost(std::size_t disc, Peg idle)>;

  explicit WeightTable(Fn fn, std::optional<std::size_t> max_disc = std::nullopt);

  static WeightTable constant(const WeightRow& row);
  static WeightTable constant(Cost w0, Cost w1, Cost w2) { return constant(WeightRow{w0, w1, w2}); }
  /// Explicit table; defined for discs 0..rows.size()-1.
  static WeightTable from_rows(std::vector<WeightRow> rows);

  /// Throws std::out_of_range beyond max_disc.
  [[nodiscard]] Cost at(std::size_t disc, Peg idle) const;
  [[nodiscard]] WeightRow row(std::size_t disc) const;
  /// Rows 0..count-1.
  [[nodiscard]] std::vector<WeightRow> rows(std::size_t count) const;

  /// Exclusive upper bound on the disc index, if any.
  [[nodiscard]] std::optional<std::size_t> max_disc() const noexcept { return max_disc_; }
  [[nodiscard]] bool covers(std::size_t discs) const noexcept { return !max_disc_ || discs <= *max_disc_; }

  /// The same costs with pegs 0 and 2 exchanged.
  [[nodiscard]] WeightTable swapped_outer() const;

 private:
  Fn fn_;
  std::optional<std::size_t> max_disc_;
};

}  // namespace whanoi
