#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

#include "whanoi/cost.hpp"
#include "whanoi/peg.hpp"
#include "whanoi/weights.hpp"

namespace whanoi {

/// Minimal transfer costs (d0, d1, d2); component k is the cost of moving a
/// tower between the two pegs other than k.
struct CostVector {
  std::array<Cost, 3> d{};

  CostVector() = default;
  CostVector(Cost d0, Cost d1, Cost d2) : d{std::move(d0), std::move(d1), std::move(d2)} {}

  [[nodiscard]] const Cost& operator[](Peg idle) const { return d[idle.index()]; }
  [[nodiscard]] Cost& operator[](Peg idle) { return d[idle.index()]; }
  [[nodiscard]] const Cost& operator[](std::size_t k) const { return d.at(k); }
  [[nodiscard]] Cost& operator[](std::size_t k) { return d.at(k); }

  [[nodiscard]] bool is_finite() const;
  /// d_k <= d_i + d_j for every labelling of the three pegs.
  [[nodiscard]] bool satisfies_triangle() const;
  /// Components 0 and 2 exchanged.
  [[nodiscard]] CostVector swapped_outer() const { return {d[2], d[1], d[0]}; }

  friend bool operator==(const CostVector&, const CostVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const CostVector& v);

namespace linalg {

/// Exact 3x3 integer matrix.
class Mat3 {
 public:
  using Rows = std::array<std::array<Integer, 3>, 3>;

  Mat3() = default;
  explicit Mat3(Rows rows) : rows_(std::move(rows)) {}

  static Mat3 identity();
  static Mat3 all_ones();

  [[nodiscard]] const Integer& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  [[nodiscard]] Integer& at(std::size_t r, std::size_t c) { return rows_.at(r).at(c); }

  friend Mat3 operator*(const Mat3& lhs, const Mat3& rhs);
  friend Mat3 operator+(const Mat3& lhs, const Mat3& rhs);
  friend Mat3 operator*(const Integer& factor, const Mat3& m);
  friend bool operator==(const Mat3&, const Mat3&) = default;

  /// Product with a finite cost vector; nonnegative entries keep it a cost.
  [[nodiscard]] CostVector apply(const CostVector& v) const;

 private:
  Rows rows_{};
};

std::ostream& operator<<(std::ostream& os, const Mat3& m);

/// One-LDM operator: zero diagonal, ones elsewhere.
Mat3 one_ldm_operator();
/// Operator of the linear variant (moves between pegs 0 and 2 forbidden).
Mat3 forbidden_operator();

/// Closed form: diagonal J~_n, off-diagonal J_n.
Mat3 mat_a_power(unsigned n);
/// Closed form: rows (1-c_n, N_n, c_n), (0, 3^n, 0), (c_n, N_n, 1-c_n).
Mat3 mat_b_power(unsigned n);
/// Binary exponentiation; independent of the closed forms above.
Mat3 mat_power_generic(const Mat3& m, unsigned n);

// Pure-branch solvers. None of them minimize; `first_level` is the disc
// index whose weights drive the first step (d0 is the cost vector at that
// level), which lets regimes be stitched together.

/// d_{m+1} = A d_m + w_m. Throws InapplicableError on an infinite weight.
CostVector solve_one_ldm(const CostVector& d0, const WeightTable& weights, std::size_t n,
                         std::size_t first_level = 0);
/// d_{m+1} = 3 d_m + b_m with b_m = |w_m| (1,1,1) - w_m.
CostVector solve_two_ldm(const CostVector& d0, const WeightTable& weights, std::size_t n,
                         std::size_t first_level = 0);
/// d_{m+1} = B d_m + v_m with v_m = (w_{m,0}, w_{m,0} + w_{m,2}, w_{m,2});
/// the idle-peg-1 weights are ignored.
CostVector solve_forbidden(const CostVector& d0, const WeightTable& weights, std::size_t n,
                           std::size_t first_level = 0);

}  // namespace linalg
}  // namespace whanoi
