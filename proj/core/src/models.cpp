#include "whanoi/models.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "whanoi/errors.hpp"

namespace whanoi::models {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::array<std::pair<DiscSequence, std::string_view>, 6> kDiscNames{{
    {DiscSequence::Fibonacci, "fibonacci"},
    {DiscSequence::Lucas, "lucas"},
    {DiscSequence::Jacobsthal, "jacobsthal"},
    {DiscSequence::Pell, "pell"},
    {DiscSequence::Mersenne, "mersenne"},
    {DiscSequence::Lichtenberg, "lichtenberg"},
}};

Rational rational_pow(const Rational& base, std::size_t exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

long as_long(std::size_t n) { return static_cast<long>(n); }

const Cost& finite(const Cost& c, const char* what) {
  if (c.is_infinite()) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
  return c;
}

Cost one() { return Cost{1}; }

}  // namespace

void SeqSpec::validate() const {
  if (coeffs.empty()) {
    throw std::invalid_argument("recurrence order must be at least 1");
  }
  if (seeds.size() != coeffs.size()) {
    throw std::invalid_argument("recurrence of order " + std::to_string(coeffs.size()) + " needs exactly " +
                                std::to_string(coeffs.size()) + " seeds, got " + std::to_string(seeds.size()));
  }
}

std::vector<Rational> SeqSpec::generate(std::size_t count) const {
  validate();
  std::vector<Rational> out(seeds.begin(), seeds.end());
  const std::size_t delta = order();
  while (out.size() < count) {
    Rational next = constant;
    const std::size_t base = out.size() - delta;
    for (std::size_t v = 0; v < delta; ++v) next += coeffs[v] * out[base + v];
    out.push_back(std::move(next));
  }
  out.resize(count);
  return out;
}

std::string_view disc_sequence_name(DiscSequence s) {
  for (const auto& [seq, name] : kDiscNames) {
    if (seq == s) return name;
  }
  throw std::invalid_argument("unknown disc sequence");
}

DiscSequence parse_disc_sequence(std::string_view name) {
  for (const auto& [seq, n] : kDiscNames) {
    if (n == name) return seq;
  }
  throw std::invalid_argument("unknown disc-cost sequence '" + std::string(name) +
                              "' (expected fibonacci, lucas, jacobsthal, pell, mersenne or lichtenberg)");
}

SeqSpec disc_sequence_spec(DiscSequence s) {
  switch (s) {
    case DiscSequence::Fibonacci: return {{1, 1}, 0, {1, 1}};
    case DiscSequence::Lucas: return {{1, 1}, 0, {2, 1}};
    case DiscSequence::Jacobsthal: return {{2, 1}, 0, {1, 1}};
    case DiscSequence::Pell: return {{1, 2}, 0, {1, 2}};
    case DiscSequence::Mersenne: return {{2}, 1, {1}};
    case DiscSequence::Lichtenberg: return {{2, 1}, 1, {1, 2}};
  }
  throw std::invalid_argument("unknown disc sequence");
}

Integer disc_sequence_alpha(DiscSequence s, std::size_t n) {
  const long k = as_long(n);
  switch (s) {
    case DiscSequence::Fibonacci: return seq_eval(Sequence::Fibonacci, k + 1);
    case DiscSequence::Lucas: return seq_eval(Sequence::Lucas, k);
    case DiscSequence::Jacobsthal: return seq_eval(Sequence::Jacobsthal, k + 1);
    case DiscSequence::Pell: return seq_eval(Sequence::Pell, k + 1);
    case DiscSequence::Mersenne: return seq_eval(Sequence::Mersenne, k + 1);
    case DiscSequence::Lichtenberg: return seq_eval(Sequence::Lichtenberg, k + 1);
  }
  throw std::invalid_argument("unknown disc sequence");
}

Rational alpha_at(const AlphaSource& alpha, std::size_t n) {
  return std::visit(Overloaded{
                        [n](const Polynomial& p) { return p(Rational(as_long(n))); },
                        [n](const SeqSpec& s) { return s.generate(n + 1).back(); },
                        [n](Sequence s) { return Rational(seq_eval(s, as_long(n))); },
                    },
                    alpha);
}

std::string_view model_kind(const ModelSpec& model) {
  return std::visit(Overloaded{
                        [](const Constant&) { return std::string_view("constant"); },
                        [](const Table&) { return std::string_view("table"); },
                        [](const MassiveSymmetric&) { return std::string_view("massive"); },
                        [](const Geometric&) { return std::string_view("geometric"); },
                        [](const Arithmetic&) { return std::string_view("arithmetic"); },
                        [](const NaturalMasses&) { return std::string_view("natural-masses"); },
                        [](const CheapIdleMassive&) { return std::string_view("cheap-idle-massive"); },
                        [](const PolynomialCosts&) { return std::string_view("polynomial"); },
                        [](const NamedSeqCosts&) { return std::string_view("named-seq"); },
                        [](const ForbiddenMiddle&) { return std::string_view("forbidden-middle"); },
                        [](const ConstantNonuniform&) { return std::string_view("constant-nonuniform"); },
                        [](const Consecutive&) { return std::string_view("consecutive"); },
                        [](const FastMiddle&) { return std::string_view("fast-middle"); },
                    },
                    model);
}

WeightTable lower(const ModelSpec& model) {
  return std::visit(
      Overloaded{
          [](const Constant& m) { return WeightTable::constant(m.w); },
          [](const Table& m) { return WeightTable::from_rows(m.rows); },
          [](const MassiveSymmetric& m) {
            if (const auto* s = std::get_if<SeqSpec>(&m.alpha)) s->validate();
            return WeightTable([alpha = m.alpha](std::size_t disc, Peg) { return Cost(alpha_at(alpha, disc)); });
          },
          [](const Geometric& m) {
            const Rational c = finite(m.c, "geometric c").value();
            const Rational r = finite(m.r, "geometric r").value();
            return WeightTable([c, r](std::size_t disc, Peg) { return Cost(Rational(c * rational_pow(r, disc))); });
          },
          [](const Arithmetic& m) {
            const Rational a = finite(m.a, "arithmetic a").value();
            const Rational b = finite(m.b, "arithmetic b").value();
            return WeightTable([a, b](std::size_t disc, Peg) { return Cost(Rational(a + b * as_long(disc))); });
          },
          [](const NaturalMasses&) {
            return WeightTable([](std::size_t disc, Peg) { return Cost(as_long(disc) + 1); });
          },
          [](const CheapIdleMassive&) {
            return WeightTable([](std::size_t disc, Peg idle) {
              return idle.index() == 1 ? Cost{} : Cost(as_long(disc) + 1);
            });
          },
          [](const PolynomialCosts& m) {
            if (m.p.is_zero()) throw std::domain_error("polynomial disc costs need a nonzero polynomial");
            return WeightTable([p = m.p](std::size_t disc, Peg) { return Cost(p(Rational(as_long(disc)))); });
          },
          [](const NamedSeqCosts& m) {
            return WeightTable([s = m.name](std::size_t disc, Peg) { return Cost(disc_sequence_alpha(s, disc)); });
          },
          [](const ForbiddenMiddle& m) {
            if (const auto* s = std::get_if<SeqSpec>(&m.side)) s->validate();
            return WeightTable([side = m.side](std::size_t disc, Peg idle) {
              return idle.index() == 1 ? Cost::infinity() : Cost(alpha_at(side, disc));
            });
          },
          [](const ConstantNonuniform& m) {
            return WeightTable::constant(one(), finite(m.w, "constant-nonuniform w"), one());
          },
          [](const Consecutive& m) {
            const Cost w = finite(m.w, "consecutive w");
            return WeightTable::constant(w, w + Cost{1}, w + Cost{2});
          },
          [](const FastMiddle&) {
            return WeightTable([](std::size_t disc, Peg idle) {
              return idle.index() == 1 ? Cost(pow_int(4, as_long(disc))) : one();
            });
          },
      },
      model);
}

CostVector nonmassive_closed(const WeightRow& w, std::size_t n) {
  for (const auto& c : w) finite(c, "nonmassive weight");
  const long k = as_long(n);
  const Rational total = w[0].value() + w[1].value() + w[2].value();
  const Rational common = total * lichtenberg(k - 1);
  const Integer c = parity(k);
  CostVector out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = Cost(Rational(common + c * w[i].value()));
  return out;
}

Cost massive_closed(const std::function<Cost(std::size_t)>& alpha, std::size_t n) {
  Cost total;
  for (std::size_t v = 0; v < n; ++v) total += pow2(as_long(n - 1 - v)) * alpha(v);
  return total;
}

Cost geometric_closed(const Cost& c, const Cost& r, std::size_t n) {
  const Rational& cv = finite(c, "geometric c").value();
  const Rational& rv = finite(r, "geometric r").value();
  const long k = as_long(n);
  if (rv == 2) {
    return Cost(Rational(cv * k * pow2(k) / 2));
  }
  return Cost(Rational(cv * (pow2(k) - rational_pow(rv, n)) / (2 - rv)));
}

Cost arithmetic_closed(const Cost& a, const Cost& b, std::size_t n) {
  const long k = as_long(n);
  const Rational& av = finite(a, "arithmetic a").value();
  const Rational& bv = finite(b, "arithmetic b").value();
  return Cost(Rational(av * (pow2(k) - 1) + bv * (pow2(k) - k - 1)));
}

CostVector cheap_idle_massive_closed(std::size_t n) {
  Integer upto_n = 0;
  Integer upto_prev = 0;
  for (long v = 0; v <= as_long(n); ++v) {
    upto_prev = upto_n;
    upto_n += lichtenberg(v);
  }
  return {Cost(upto_n), Cost(Integer(2 * upto_prev)), Cost(upto_n)};
}

Polynomial poly_q(const Polynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("poly_q needs a nonzero polynomial");
  }
  const auto delta = static_cast<std::size_t>(p.degree());
  std::vector<Rational> q(delta + 1);
  for (std::size_t m = delta + 1; m-- > 0;) {
    Rational qm = p.coeff(m);
    for (std::size_t mu = m + 1; mu <= delta; ++mu) qm += binomial(mu, m) * q[mu];
    q[m] = std::move(qm);
  }
  return Polynomial(std::move(q));
}

Cost poly_closed(const Polynomial& p, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    if (sgn(p(Rational(as_long(v)))) < 0) {
      throw std::domain_error("polynomial disc cost P(" + std::to_string(v) + ") is negative");
    }
  }
  const Polynomial q = poly_q(p);
  return Cost(Rational(q(Rational(0)) * pow2(as_long(n)) - q(Rational(as_long(n)))));
}

std::string TransformResult::recurrence() const {
  const std::size_t top = tau.size();
  std::string out = "t[n+" + std::to_string(top) + "]=";
  bool first = true;
  auto term = [](std::size_t index) { return index == 0 ? std::string("t[n]") : "t[n+" + std::to_string(index) + "]"; };
  for (std::size_t idx = top; idx-- > 0;) {
    const Rational& c = tau[idx];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) out += "-";
    else if (!first) out += "+";
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str();
    out += term(idx);
    first = false;
  }
  if (sgn(constant) != 0) {
    out += sgn(constant) < 0 ? "-" : (first ? "" : "+");
    out += Rational(abs(constant)).get_str();
    first = false;
  }
  if (first) out += "0";
  return out;
}

TransformResult seq_transform(const SeqSpec& spec, const Rational& t0, std::size_t count) {
  spec.validate();
  const std::size_t delta = spec.order();
  TransformResult out;
  const std::vector<Rational> alpha = spec.generate(count);
  out.values.reserve(count + 1);
  out.values.push_back(t0);
  for (std::size_t m = 0; m < count; ++m) out.values.push_back(2 * out.values.back() + alpha[m]);

  // tau_v = a_{v-1} - 2 a_v with a_{-1} = 0 and a_delta = -1
  auto a = [&](long v) -> Rational {
    if (v < 0) return 0;
    if (static_cast<std::size_t>(v) == delta) return -1;
    return spec.coeffs[static_cast<std::size_t>(v)];
  };
  out.tau.reserve(delta + 1);
  for (long v = 0; v <= as_long(delta); ++v) out.tau.push_back(a(v - 1) - 2 * a(v));
  out.constant = spec.constant;
  return out;
}

Integer named_seq_cost_closed(DiscSequence name, std::size_t n) {
  const long k = as_long(n);
  switch (name) {
    case DiscSequence::Fibonacci: return pow2(k + 1) - seq_eval(Sequence::Fibonacci, k + 3);
    case DiscSequence::Lucas: return 3 * pow2(k) - seq_eval(Sequence::Lucas, k + 2);
    case DiscSequence::Jacobsthal: return Integer(((k + 1) * pow2(k) - jacobsthal(k + 1)) / 3);
    case DiscSequence::Pell: return seq_eval(Sequence::Pell, k + 2) - pow2(k + 1);
    case DiscSequence::Mersenne: return Integer((k - 1) * pow2(k) + 1);
    case DiscSequence::Lichtenberg: {
      // t_{n+3} = 3 t_{n+2} - 4 t_n + 1, seeds 0, 1, 4
      std::array<Integer, 3> t{0, 1, 4};
      if (n < 3) return t[n];
      for (std::size_t i = 3; i <= n; ++i) {
        Integer next = 3 * t[2] - 4 * t[0] + 1;
        t = {t[1], t[2], std::move(next)};
      }
      return t[2];
    }
  }
  throw std::invalid_argument("unknown disc sequence");
}

CostVector lth_closed(LthVariant variant, std::size_t n) {
  const long k = as_long(n);
  if (variant == LthVariant::Unit) {
    return {Cost(half3(k)), Cost(Integer(pow3(k) - 1)), Cost(half3(k))};
  }
  Integer sum = 0;
  for (long v = 0; v <= k; ++v) sum += half3(v);
  return {Cost(sum), Cost(Integer(2 * sum)), Cost(sum)};
}

CostVector forbidden_closed(const WeightTable& weights, std::size_t n) {
  CostVector total(Cost{}, Cost{}, Cost{});
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t disc = n - 1 - v;
    const Cost left = weights.at(disc, Peg{0});
    const Cost right = weights.at(disc, Peg{2});
    if (left.is_infinite() || right.is_infinite()) {
      throw InapplicableError("linear variant needs finite weights for idle pegs 0 and 2");
    }
    const CostVector step = linalg::mat_b_power(static_cast<unsigned>(v)).apply({left, left + right, right});
    for (std::size_t i = 0; i < 3; ++i) total[i] += step[i];
  }
  return total;
}

std::size_t threshold_index(const Rational& w) {
  if (sgn(w) < 0) {
    throw std::domain_error("threshold index needs w >= 0");
  }
  std::size_t m = 0;
  while (threshold(as_long(m + 1)) <= w) ++m;
  return m;
}

PhaseClosed constant_nonuniform_closed(const Rational& w, std::size_t n) {
  const std::size_t m = threshold_index(w);
  if (n <= m) {
    const Integer nn = half3(as_long(n));
    return {{Cost(nn), Cost(Integer(2 * nn)), Cost(nn)}, m};
  }
  const long s = as_long(n - m);
  const Integer nm = half3(as_long(m));
  const Rational outer = nm * jacobsthal(s + 2) + lichtenberg(s) + w * lichtenberg(s - 1);
  // l_{s-2} with s = 1 reaches l_{-1} = 0
  const Rational middle = 2 * nm * jacobsthal(s + 1) + 2 * lichtenberg(s - 1) +
                          2 * w * (s >= 1 ? lichtenberg(s - 2) : Integer(0)) + w;
  return {{Cost(outer), Cost(middle), Cost(outer)}, m};
}

CostVector consecutive_closed(unsigned long w, std::size_t n) {
  const long k = as_long(n);
  if (n == 0) return {Cost{}, Cost{}, Cost{}};
  if (w == 0) {
    // x, y, z of the (n-1)-indexed sequences
    const long j = k - 1;
    return {Cost(Integer(lichtenberg(j) + mersenne(j))), Cost(Integer(lichtenberg(j + 1) + lichtenberg(j - 1))),
            Cost(Integer(lichtenberg(j) + pow2(j)))};
  }
  const Integer base = 6 * lichtenberg(k - 1);
  const Integer c = parity(k);
  const Integer extra = Integer(w - 1) * mersenne(k);
  return {Cost(Integer(base + c + extra)), Cost(Integer(base + 2 * c + extra)), Cost(Integer(base + 3 * c + extra))};
}

CostVector fast_middle_closed(std::size_t n) {
  if (n == 0) return {Cost{}, Cost{}, Cost{}};
  const Integer p = pow3(as_long(n) - 1);
  return {Cost(p), Cost(Integer(2 * p - 1)), Cost(p)};
}

std::optional<ClosedForm> closed_form(const ModelSpec& model, std::size_t n) {
  auto exact = [](CostVector v) { return std::optional<ClosedForm>(ClosedForm{std::move(v), false}); };
  auto symmetric = [&](const Cost& t) { return exact({t, t, t}); };
  auto alpha_fn = [](const AlphaSource& a) {
    return [a](std::size_t v) { return Cost(alpha_at(a, v)); };
  };

  return std::visit(
      Overloaded{
          [&](const Constant& m) -> std::optional<ClosedForm> {
            if (m.w[0].is_finite() && m.w[1].is_finite() && m.w[2].is_finite()) {
              return ClosedForm{nonmassive_closed(m.w, n), true};
            }
            if (m.w[0].is_finite() && m.w[2].is_finite()) {
              return exact(forbidden_closed(WeightTable::constant(m.w), n));
            }
            return std::nullopt;
          },
          [](const Table&) -> std::optional<ClosedForm> { return std::nullopt; },
          [&](const MassiveSymmetric& m) -> std::optional<ClosedForm> {
            if (const auto* p = std::get_if<Polynomial>(&m.alpha)) return symmetric(poly_closed(*p, n));
            return symmetric(massive_closed(alpha_fn(m.alpha), n));
          },
          [&](const Geometric& m) { return symmetric(geometric_closed(m.c, m.r, n)); },
          [&](const Arithmetic& m) { return symmetric(arithmetic_closed(m.a, m.b, n)); },
          [&](const NaturalMasses&) { return symmetric(Cost(seq_eval(Sequence::Euler, as_long(n)))); },
          [&](const CheapIdleMassive&) { return exact(cheap_idle_massive_closed(n)); },
          [&](const PolynomialCosts& m) { return symmetric(poly_closed(m.p, n)); },
          [&](const NamedSeqCosts& m) { return symmetric(Cost(named_seq_cost_closed(m.name, n))); },
          [&](const ForbiddenMiddle& m) -> std::optional<ClosedForm> {
            if (const auto* p = std::get_if<Polynomial>(&m.side)) {
              if (*p == Polynomial{1}) return exact(lth_closed(LthVariant::Unit, n));
              if (*p == Polynomial{1, 1}) return exact(lth_closed(LthVariant::Massive, n));
            }
            return exact(forbidden_closed(lower(m), n));
          },
          [&](const ConstantNonuniform& m) {
            return exact(constant_nonuniform_closed(finite(m.w, "constant-nonuniform w").value(), n).d);
          },
          [&](const Consecutive& m) -> std::optional<ClosedForm> {
            const Rational& w = finite(m.w, "consecutive w").value();
            if (w.get_den() != 1 || !w.get_num().fits_ulong_p()) return std::nullopt;
            return exact(consecutive_closed(w.get_num().get_ui(), n));
          },
          [&](const FastMiddle&) { return exact(fast_middle_closed(n)); },
      },
      model);
}

}  // namespace whanoi::models
