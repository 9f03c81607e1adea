#include "whanoi/sequences.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace whanoi {

namespace {

constexpr std::array<std::pair<Sequence, std::string_view>, 14> kNames{{
    {Sequence::Jacobsthal, "jacobsthal"},
    {Sequence::JacobsthalDiff, "jacobsthal_diff"},
    {Sequence::Lichtenberg, "lichtenberg"},
    {Sequence::Parity, "parity"},
    {Sequence::Mersenne, "mersenne"},
    {Sequence::Euler, "euler"},
    {Sequence::Half3, "half3"},
    {Sequence::Threshold, "threshold"},
    {Sequence::Fibonacci, "fibonacci"},
    {Sequence::Lucas, "lucas"},
    {Sequence::Pell, "pell"},
    {Sequence::Pow2, "pow2"},
    {Sequence::Pow3, "pow3"},
    {Sequence::Pow4, "pow4"},
}};

Integer sign_power(long n) { return n % 2 == 0 ? Integer(1) : Integer(-1); }

Integer pell(unsigned long n) {
  Integer prev = 0;
  Integer cur = 1;
  if (n == 0) return prev;
  for (unsigned long k = 1; k < n; ++k) {
    Integer next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::string_view sequence_name(Sequence seq) {
  for (const auto& [s, name] : kNames) {
    if (s == seq) return name;
  }
  throw std::invalid_argument("unknown sequence");
}

Sequence parse_sequence(std::string_view name) {
  for (const auto& [s, n] : kNames) {
    if (n == name) return s;
  }
  throw std::invalid_argument("unknown sequence name '" + std::string(name) + "'");
}

Integer pow_int(unsigned long base, long exponent) {
  if (exponent < 0) {
    throw std::domain_error("negative exponent");
  }
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exponent));
  return out;
}

Integer seq_eval(Sequence seq, long n) {
  if (seq == Sequence::Lichtenberg && n == -1) {
    return 0;
  }
  if (n < 0) {
    throw std::domain_error("sequence " + std::string(sequence_name(seq)) + " is undefined at index " +
                            std::to_string(n));
  }
  const auto un = static_cast<unsigned long>(n);
  switch (seq) {
    case Sequence::Jacobsthal:
      return Integer((pow2(n) - sign_power(n)) / 3);
    case Sequence::JacobsthalDiff:
      return Integer((pow2(n) - sign_power(n)) / 3 + sign_power(n));
    case Sequence::Lichtenberg:
      // floor(2^{n+1} / 3), the partial sums of J
      return Integer(pow2(n + 1) / 3);
    case Sequence::Parity:
      return Integer(n % 2);
    case Sequence::Mersenne:
      return Integer(pow2(n) - 1);
    case Sequence::Euler:
      return Integer(pow2(n + 1) - n - 2);
    case Sequence::Half3:
      return Integer((pow3(n) - 1) / 2);
    case Sequence::Threshold:
      return n == 0 ? Integer(0) : Integer(2 * pow3(n - 1));
    case Sequence::Fibonacci: {
      Integer out;
      mpz_fib_ui(out.get_mpz_t(), un);
      return out;
    }
    case Sequence::Lucas: {
      Integer out;
      mpz_lucnum_ui(out.get_mpz_t(), un);
      return out;
    }
    case Sequence::Pell:
      return pell(un);
    case Sequence::Pow2:
      return pow2(n);
    case Sequence::Pow3:
      return pow3(n);
    case Sequence::Pow4:
      return pow_int(4, n);
  }
  throw std::invalid_argument("unknown sequence");
}

}  // namespace whanoi
