#include "whanoi/polynomial.hpp"

#include <ostream>

namespace whanoi::models {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
    : Polynomial(std::vector<Rational>(coeffs.begin(), coeffs.end())) {}

Polynomial Polynomial::shifted_power(long shift, unsigned power) {
  std::vector<Rational> c(power + 1);
  Integer binom = 1;
  for (unsigned m = 0; m <= power; ++m) {
    // C(power, m) * shift^(power - m)
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), Integer(shift).get_mpz_t(), power - m);
    c[m] = binom * s;
    binom = binom * (power - m) / (m + 1);
  }
  return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int m = degree(); m >= 0; --m) {
    const Rational& c = coeffs_[static_cast<std::size_t>(m)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    const Rational mag = abs(c);
    if (m == 0 || mag != 1) out += mag.get_str();
    if (m >= 1) out += "x";
    if (m >= 2) out += "^" + std::to_string(m);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace whanoi::models
