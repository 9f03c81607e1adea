#include "whanoi/cost.hpp"

#include <ostream>
#include <stdexcept>

namespace whanoi {

namespace {

Rational checked_nonnegative(Rational value) {
  value.canonicalize();
  if (sgn(value) < 0) {
    throw std::domain_error("cost must be nonnegative, got " + value.get_str());
  }
  return value;
}

}  // namespace

Cost::Cost(long value) : value_(checked_nonnegative(Rational(value))) {}
Cost::Cost(const Integer& value) : value_(checked_nonnegative(Rational(value))) {}
Cost::Cost(const Rational& value) : value_(checked_nonnegative(value)) {}

Cost Cost::infinity() {
  Cost c;
  c.infinite_ = true;
  return c;
}

Cost Cost::parse(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "infinity") {
    return infinity();
  }
  return Cost(parse_rational(text));
}

const Rational& Cost::value() const {
  if (infinite_) {
    throw std::domain_error("infinite cost has no finite value");
  }
  return value_;
}

std::string Cost::to_string() const {
  return infinite_ ? std::string("inf") : value_.get_str();
}

Cost& Cost::operator+=(const Cost& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

Cost operator*(const Integer& factor, const Cost& cost) {
  if (sgn(factor) < 0) {
    throw std::domain_error("cost scaling factor must be nonnegative");
  }
  if (sgn(factor) == 0) {
    return Cost{};
  }
  if (cost.infinite_) {
    return Cost::infinity();
  }
  return Cost(Rational(factor * cost.value_));
}

bool operator==(const Cost& lhs, const Cost& rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    return lhs.infinite_ == rhs.infinite_;
  }
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const Cost& lhs, const Cost& rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    return lhs.infinite_ <=> rhs.infinite_;
  }
  return cmp(lhs.value_, rhs.value_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Cost& cost) { return os << cost.to_string(); }

Cost cost_add(const Cost& a, const Cost& b) { return a + b; }

MinResult cost_min(const Cost& a, const Cost& b) {
  const auto order = a <=> b;
  if (order < 0) return {a, MinSide::Left};
  if (order > 0) return {b, MinSide::Right};
  return {a, MinSide::Tie};
}

std::string rational_to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto valid = !s.empty() && s.find_first_not_of("+-0123456789/") == std::string::npos &&
                     s.find('/') == s.rfind('/') && s.back() != '/' && s.front() != '/';
  Rational r;
  if (!valid || r.set_str(s.front() == '+' ? s.substr(1) : s, 10) != 0) {
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  }
  if (sgn(r.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace whanoi
