#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace whanoi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact nonnegative move or transfer cost, extended by +infinity.
///
/// Infinity is the min-plus zero: it absorbs addition, dominates every finite
/// value in comparisons and marks forbidden move types.
class Cost {
 public:
  Cost() = default;
  Cost(long value);             // NOLINT(google-explicit-constructor)
  Cost(const Integer& value);   // NOLINT(google-explicit-constructor)
  Cost(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Cost infinity();

  /// Accepts "inf", an integer ("7") or a fraction ("3/2").
  static Cost parse(std::string_view text);

  [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
  [[nodiscard]] bool is_finite() const noexcept { return !infinite_; }
  [[nodiscard]] bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }

  /// Throws std::domain_error for infinity.
  [[nodiscard]] const Rational& value() const;

  /// Canonical exact text: "7", "3/2" or "inf".
  [[nodiscard]] std::string to_string() const;

  Cost& operator+=(const Cost& other);

  friend Cost operator+(Cost lhs, const Cost& rhs) { return lhs += rhs; }

  /// Scaling by a nonnegative integer; 0 * inf is taken as 0 (empty sum).
  friend Cost operator*(const Integer& factor, const Cost& cost);
  friend Cost operator*(long factor, const Cost& cost) { return Integer(factor) * cost; }

  friend bool operator==(const Cost& lhs, const Cost& rhs);
  friend std::strong_ordering operator<=>(const Cost& lhs, const Cost& rhs);

 private:
  bool infinite_ = false;
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Cost& cost);

enum class MinSide { Left, Right, Tie };

struct MinResult {
  Cost value;
  MinSide side;
};

Cost cost_add(const Cost& a, const Cost& b);
MinResult cost_min(const Cost& a, const Cost& b);

/// Exact text of a rational that may be negative ("-3/2").
std::string rational_to_string(const Rational& value);
Rational parse_rational(std::string_view text);

}  // namespace whanoi
