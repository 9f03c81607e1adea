#include "whanoi/linalg.hpp"

#include <ostream>
#include <string>

#include "whanoi/errors.hpp"
#include "whanoi/sequences.hpp"

namespace whanoi {

bool CostVector::is_finite() const {
  return d[0].is_finite() && d[1].is_finite() && d[2].is_finite();
}

bool CostVector::satisfies_triangle() const {
  for (std::size_t k = 0; k < 3; ++k) {
    if (d[k] > d[(k + 1) % 3] + d[(k + 2) % 3]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const CostVector& v) {
  return os << '(' << v.d[0] << ", " << v.d[1] << ", " << v.d[2] << ')';
}

namespace linalg {

Mat3 Mat3::identity() {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i) m.rows_[i][i] = 1;
  return m;
}

Mat3 Mat3::all_ones() {
  Mat3 m;
  for (auto& row : m.rows_) row.fill(1);
  return m;
}

Mat3 operator*(const Mat3& lhs, const Mat3& rhs) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Integer sum = 0;
      for (std::size_t k = 0; k < 3; ++k) sum += lhs.rows_[i][k] * rhs.rows_[k][j];
      out.rows_[i][j] = std::move(sum);
    }
  }
  return out;
}

Mat3 operator+(const Mat3& lhs, const Mat3& rhs) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out.rows_[i][j] = lhs.rows_[i][j] + rhs.rows_[i][j];
  }
  return out;
}

Mat3 operator*(const Integer& factor, const Mat3& m) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out.rows_[i][j] = factor * m.rows_[i][j];
  }
  return out;
}

CostVector Mat3::apply(const CostVector& v) const {
  CostVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < 3; ++j) sum += rows_[i][j] * v.d[j].value();
    out.d[i] = Cost(sum);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
  os << '[';
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? "; " : "") << m.at(i, 0) << ' ' << m.at(i, 1) << ' ' << m.at(i, 2);
  }
  return os << ']';
}

Mat3 one_ldm_operator() {
  return Mat3({{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
}

Mat3 forbidden_operator() {
  return Mat3({{{0, 1, 1}, {0, 3, 0}, {1, 1, 0}}});
}

Mat3 mat_a_power(unsigned n) {
  const Integer off = jacobsthal(n);
  const Integer diag = jacobsthal_diff(n);
  Mat3 m(Mat3::Rows{{{diag, off, off}, {off, diag, off}, {off, off, diag}}});
  return m;
}

Mat3 mat_b_power(unsigned n) {
  const Integer c = parity(n);
  const Integer nn = half3(n);
  const Integer keep = 1 - c;
  return Mat3(Mat3::Rows{{{keep, nn, c}, {Integer(0), pow3(n), Integer(0)}, {c, nn, keep}}});
}

Mat3 mat_power_generic(const Mat3& m, unsigned n) {
  Mat3 result = Mat3::identity();
  Mat3 base = m;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

WeightRow finite_row(const WeightTable& weights, std::size_t disc, const char* regime) {
  WeightRow row = weights.row(disc);
  for (const auto& w : row) {
    if (w.is_infinite()) {
      throw InapplicableError(std::string(regime) + " recurrence needs finite weights; disc index " +
                              std::to_string(disc) + " has a forbidden move type");
    }
  }
  return row;
}

}  // namespace

CostVector solve_one_ldm(const CostVector& d0, const WeightTable& weights, std::size_t n,
                         std::size_t first_level) {
  CostVector d = d0;
  for (std::size_t step = 0; step < n; ++step) {
    const WeightRow w = finite_row(weights, first_level + step, "one-LDM");
    CostVector next;
    for (Peg k : kPegs) {
      const auto [i, j] = outer_pegs(k);
      next[k] = d[i] + d[j] + w[k.index()];
    }
    d = std::move(next);
  }
  return d;
}

CostVector solve_two_ldm(const CostVector& d0, const WeightTable& weights, std::size_t n,
                         std::size_t first_level) {
  CostVector d = d0;
  for (std::size_t step = 0; step < n; ++step) {
    const WeightRow w = finite_row(weights, first_level + step, "two-LDM");
    const Rational total = w[0].value() + w[1].value() + w[2].value();
    CostVector next;
    for (std::size_t k = 0; k < 3; ++k) {
      next[k] = 3 * d[k] + Cost(Rational(total - w[k].value()));
    }
    d = std::move(next);
  }
  return d;
}

CostVector solve_forbidden(const CostVector& d0, const WeightTable& weights, std::size_t n,
                           std::size_t first_level) {
  CostVector d = d0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t disc = first_level + step;
    const Cost left = weights.at(disc, Peg{0});
    const Cost right = weights.at(disc, Peg{2});
    if (left.is_infinite() || right.is_infinite()) {
      throw InapplicableError("linear variant needs finite weights for idle pegs 0 and 2");
    }
    CostVector next(d[1] + d[2] + left, 3 * d[1] + left + right, d[0] + d[1] + right);
    d = std::move(next);
  }
  return d;
}

}  // namespace linalg
}  // namespace whanoi
