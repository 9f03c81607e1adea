#pragma once

#include <array>
#include <string_view>

#include "whanoi/cost.hpp"

namespace whanoi {

/// Integer sequences appearing in the closed forms.
enum class Sequence {
  Jacobsthal,      ///< J_n = (2^n - (-1)^n) / 3
  JacobsthalDiff,  ///< J_n + (-1)^n = J_{n+1} - J_n
  Lichtenberg,     ///< partial sums of J, with l_{-1} = 0
  Parity,          ///< n mod 2
  Mersenne,        ///< 2^n - 1
  Euler,           ///< 2^{n+1} - n - 2
  Half3,           ///< (3^n - 1) / 2
  Threshold,       ///< 0, then 2 * 3^{m-1}
  Fibonacci,
  Lucas,
  Pell,
  Pow2,
  Pow3,
  Pow4,
};

inline constexpr std::array<Sequence, 14> kAllSequences{
    Sequence::Jacobsthal, Sequence::JacobsthalDiff, Sequence::Lichtenberg, Sequence::Parity,
    Sequence::Mersenne,   Sequence::Euler,          Sequence::Half3,       Sequence::Threshold,
    Sequence::Fibonacci,  Sequence::Lucas,          Sequence::Pell,        Sequence::Pow2,
    Sequence::Pow3,       Sequence::Pow4};

std::string_view sequence_name(Sequence seq);
/// Throws std::invalid_argument for an unknown name.
Sequence parse_sequence(std::string_view name);

/// Exact term n. Negative n is a domain error, except Lichtenberg at -1.
Integer seq_eval(Sequence seq, long n);

Integer pow_int(unsigned long base, long exponent);
inline Integer pow2(long n) { return pow_int(2, n); }
inline Integer pow3(long n) { return pow_int(3, n); }
inline Integer jacobsthal(long n) { return seq_eval(Sequence::Jacobsthal, n); }
inline Integer jacobsthal_diff(long n) { return seq_eval(Sequence::JacobsthalDiff, n); }
inline Integer lichtenberg(long n) { return seq_eval(Sequence::Lichtenberg, n); }
inline Integer parity(long n) { return seq_eval(Sequence::Parity, n); }
inline Integer mersenne(long n) { return seq_eval(Sequence::Mersenne, n); }
inline Integer half3(long n) { return seq_eval(Sequence::Half3, n); }
inline Integer threshold(long m) { return seq_eval(Sequence::Threshold, m); }

}  // namespace whanoi
