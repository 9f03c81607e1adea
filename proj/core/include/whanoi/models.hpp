#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "whanoi/cost.hpp"
#include "whanoi/linalg.hpp"
#include "whanoi/polynomial.hpp"
#include "whanoi/sequences.hpp"
#include "whanoi/weights.hpp"

namespace whanoi::models {

/// Linear recurrence with constant coefficients:
///   alpha_{n+order} = constant + sum_v coeffs[v] * alpha_{n+v}
/// seeded by alpha_0 .. alpha_{order-1}.
struct SeqSpec {
  std::vector<Rational> coeffs;
  Rational constant{0};
  std::vector<Rational> seeds;

  [[nodiscard]] std::size_t order() const noexcept { return coeffs.size(); }
  /// Throws std::invalid_argument unless order >= 1 and there is one seed per coefficient.
  void validate() const;
  /// alpha_0 .. alpha_{count-1}.
  [[nodiscard]] std::vector<Rational> generate(std::size_t count) const;

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;
};

/// Classical sequences used as disc costs (with the shifts that avoid a
/// leading zero): F_{n+1}, L_n, J_{n+1}, P_{n+1}, M_{n+1}, l_{n+1}.
enum class DiscSequence { Fibonacci, Lucas, Jacobsthal, Pell, Mersenne, Lichtenberg };

inline constexpr std::array<DiscSequence, 6> kAllDiscSequences{
    DiscSequence::Fibonacci, DiscSequence::Lucas,    DiscSequence::Jacobsthal,
    DiscSequence::Pell,      DiscSequence::Mersenne, DiscSequence::Lichtenberg};

std::string_view disc_sequence_name(DiscSequence s);
DiscSequence parse_disc_sequence(std::string_view name);
/// The recurrence generating the disc costs of `s`.
SeqSpec disc_sequence_spec(DiscSequence s);
/// Cost of disc n+1 under `s`.
Integer disc_sequence_alpha(DiscSequence s, std::size_t n);

/// Source of a peg-independent disc-cost sequence alpha_n.
using AlphaSource = std::variant<Polynomial, SeqSpec, Sequence>;

Rational alpha_at(const AlphaSource& alpha, std::size_t n);

// Weight models. Each lowers to a WeightTable.

struct Constant { WeightRow w; };                      ///< w_{n,k} = w_k
struct Table { std::vector<WeightRow> rows; };         ///< explicit rows
struct MassiveSymmetric { AlphaSource alpha; };        ///< w_{n,k} = alpha_n
struct Geometric { Cost c; Cost r; };                  ///< alpha_n = c r^n
struct Arithmetic { Cost a; Cost b; };                 ///< alpha_n = a + b n
struct NaturalMasses {};                               ///< alpha_n = n + 1
struct CheapIdleMassive {};                            ///< (n+1, 0, n+1)
struct PolynomialCosts { Polynomial p; };              ///< alpha_n = P(n)
struct NamedSeqCosts { DiscSequence name; };
struct ForbiddenMiddle { AlphaSource side; };          ///< (alpha_n, inf, alpha_n)
struct ConstantNonuniform { Cost w; };                 ///< (1, w, 1)
struct Consecutive { Cost w; };                        ///< w_{n,k} = w + k
struct FastMiddle {};                                  ///< (1, 4^n, 1)

using ModelSpec = std::variant<Constant, Table, MassiveSymmetric, Geometric, Arithmetic, NaturalMasses,
                               CheapIdleMassive, PolynomialCosts, NamedSeqCosts, ForbiddenMiddle,
                               ConstantNonuniform, Consecutive, FastMiddle>;

std::string_view model_kind(const ModelSpec& model);

/// Throws std::domain_error for parameters outside the model's domain.
WeightTable lower(const ModelSpec& model);

// Closed forms.

/// |w| l_{n-1} (1,1,1) + c_n w. Only the optimum while the one-LDM branch is
/// optimal at every level.
CostVector nonmassive_closed(const WeightRow& w, std::size_t n);

/// sum_{v<n} 2^{n-1-v} alpha_v, the common cost of peg-symmetric weights.
Cost massive_closed(const std::function<Cost(std::size_t)>& alpha, std::size_t n);

Cost geometric_closed(const Cost& c, const Cost& r, std::size_t n);
Cost arithmetic_closed(const Cost& a, const Cost& b, std::size_t n);

/// Weights (n+1, 0, n+1): partial sums of the Lichtenberg numbers.
CostVector cheap_idle_massive_closed(std::size_t n);

/// The unique Q with 2 Q(x) - Q(x+1) = P(x) and deg Q = deg P.
Polynomial poly_q(const Polynomial& p);
/// Q(0) 2^n - Q(n). Throws std::domain_error if P(v) < 0 for some v < n.
Cost poly_closed(const Polynomial& p, std::size_t n);

struct TransformResult {
  std::vector<Rational> values;  ///< t_0 .. t_count
  std::vector<Rational> tau;     ///< coefficients of t_{n}, ..., t_{n+order}
  Rational constant;

  /// e.g. "t[n+3]=3t[n+2]-t[n+1]-2t[n]".
  [[nodiscard]] std::string recurrence() const;
};

/// Runs t_{m+1} = 2 t_m + alpha_m and derives the order+1 recurrence that the
/// t_n satisfy.
TransformResult seq_transform(const SeqSpec& spec, const Rational& t0, std::size_t count);

/// Minimal cost with disc costs from `name`. The Lichtenberg case is produced
/// by its order-3 recurrence; no closed form is known to this library.
Integer named_seq_cost_closed(DiscSequence name, std::size_t n);

enum class LthVariant { Unit, Massive };
CostVector lth_closed(LthVariant variant, std::size_t n);

/// sum_{v<n} B^v v_{n-1-v} with the closed-form powers of B, using the
/// idle-peg-0 and idle-peg-2 columns of `weights`.
CostVector forbidden_closed(const WeightTable& weights, std::size_t n);

/// Largest m with a_m <= w.
std::size_t threshold_index(const Rational& w);

struct PhaseClosed {
  CostVector d;
  std::size_t m;
};

/// Weights (1, w, 1): (N_n, 2N_n, N_n) up to n = m, stitched one-LDM form after.
PhaseClosed constant_nonuniform_closed(const Rational& w, std::size_t n);

/// Weights w_{n,k} = w + k. Returns d_n.
CostVector consecutive_closed(unsigned long w, std::size_t n);

/// Weights (1, 4^n, 1).
CostVector fast_middle_closed(std::size_t n);

struct ClosedForm {
  CostVector value;
  /// True when the value is only the optimum under an unverified branch
  /// assumption (the nonmassive form); compare against the DP trace first.
  bool conditional = false;
};

/// Closed-form d_n of `model`, if the model has one.
std::optional<ClosedForm> closed_form(const ModelSpec& model, std::size_t n);

}  // namespace whanoi::models
