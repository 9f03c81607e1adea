#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "whanoi/cost.hpp"

namespace whanoi::models {

/// Polynomial with exact rational coefficients; coefficient m multiplies x^m.
/// Trailing zero coefficients are dropped, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  /// (x + shift)^power, expanded.
  static Polynomial shifted_power(long shift, unsigned power);

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coeff(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : Rational(0); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] Rational operator()(const Rational& x) const;

  /// Human-readable form, e.g. "x^2+4x+6".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace whanoi::models
