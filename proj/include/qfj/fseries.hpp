#pragma once

#include "qfj/qgauss.hpp"

#include <optional>
#include <vector>

namespace qfj {

/// Per-q constants shared by the series formulas.
template <class S>
struct QTables {
  S q;
  S q2;
  S bracket2;           // [2]_q
  S factorial3;         // [3]_q!
  std::vector<S> fact_q2;        // [n]_{q^2}!
  std::vector<S> double_fact;    // [2n-1]_q!!, indexed by n

  QTables(const QParam& param, std::size_t max_factorial, std::size_t max_double_factorial)
      : q(param.as<S>()), q2(q * q), bracket2(S(1) + q), factorial3(bracket2 * (S(1) + q + q2)) {
    fact_q2.reserve(max_factorial + 1);
    fact_q2.push_back(S(1));
    for (std::size_t n = 1; n <= max_factorial; ++n) {
      fact_q2.push_back(fact_q2.back() * q_number<S>(static_cast<unsigned>(n), q2));
    }
    double_fact.reserve(max_double_factorial + 1);
    double_fact.push_back(S(1));
    for (std::size_t n = 1; n <= max_double_factorial; ++n) {
      double_fact.push_back(double_fact.back() * q_number<S>(static_cast<unsigned>(2 * n - 1), q));
    }
  }
};

namespace detail {
template <class S>
struct FloatScope {
  explicit FloatScope(const QParam& q) {
    if constexpr (std::is_same_v<S, Real>) scope.emplace(working_digits(q));
  }
  std::optional<PrecisionScope> scope;
};
}  // namespace detail

/// lambda_{c,d} = sum_{k=0}^{c} (-1)^{c-k} C(d+k,k) q^{(d+k)(d+k-1)} / ([d+k]_{q^2}! [c-k]_{q^2}!),
/// the coefficients of E_{q^2}^{x+y} / E_{q^2}^{x} = sum lambda_{c,d} x^c y^d.
template <class S>
S lambda_closed_form(unsigned c, unsigned d, const QParam& q) {
  detail::FloatScope<S> fs(q);
  const QTables<S> t(q, c + d, 0);
  S sum(0);
  for (unsigned k = 0; k <= c; ++k) {
    S term = S(scalar_cast<S>(Rational(binomial(d + k, k)))) *
             ipow(t.q, static_cast<long long>(d + k) * (d + k - 1)) /
             (t.fact_q2[d + k] * t.fact_q2[c - k]);
    sum += ((c - k) % 2 == 0) ? term : S(-term);
  }
  return sum;
}

/// lambda values for c <= max_c, d <= max_d.
struct LambdaTable {
  LambdaTable(QParam q, unsigned max_c, unsigned max_d)
      : q(std::move(q)), max_c(max_c), max_d(max_d),
        values((max_c + 1) * (max_d + 1), Rational(0)) {}

  QParam q;
  unsigned max_c;
  unsigned max_d;
  std::vector<Rational> values;

  const Rational& at(unsigned c, unsigned d) const { return values.at(c * (max_d + 1) + d); }
  Rational& at(unsigned c, unsigned d) { return values.at(c * (max_d + 1) + d); }
};

LambdaTable lambda_table(unsigned max_c, unsigned max_d, const QParam& q);

/// E_{q^2}^{x} as a bivariate series (x only), truncated at total degree.
PowerSeries2<Rational> E_q2_in_x(std::size_t total_degree, const QParam& q);
/// E_{q^2}^{x+y}, built by substituting the series x + y into E_{q^2}.
PowerSeries2<Rational> E_q2_of_sum(std::size_t total_degree, const QParam& q);

/// lambda values obtained without the closed form, by dividing the series
/// E_{q^2}^{x+y} by E_{q^2}^{x}.
LambdaTable lambda_oracle(unsigned max_c, unsigned max_d, const QParam& q);

/// One (c, d, k) term of the g^{2d} coefficient of I(g):
/// (-1)^k C(2d+k,k) q^{(2d+k)(2d+k-1)+2c} [2c+6d-1]_q!! /
///   ([2]_q^c ([3]_q!)^{2d} [2d+k]_{q^2}! [c-k]_{q^2}!).
template <class S>
S fj_term(unsigned c, unsigned d, unsigned k, const QTables<S>& t) {
  const unsigned n = 2 * d + k;
  S num = S(scalar_cast<S>(Rational(binomial(n, k)))) *
          ipow(t.q, static_cast<long long>(n) * (n - (n > 0 ? 1 : 0)) + 2LL * c) *
          t.double_fact[c + 3 * d];
  S den = ipow(t.bracket2, c) * ipow(t.factorial3, 2LL * d) * t.fact_q2[n] * t.fact_q2[c - k];
  S value = num / den;
  return (k % 2 == 0) ? value : S(-value);
}

/// The same term as a ratio of polynomials in q.
struct RationalFunction {
  QPolynomial numerator;
  QPolynomial denominator;
};
RationalFunction fj_term_rational_function(unsigned c, unsigned d, unsigned k);

template <class S>
struct FjCoefficient {
  S value{0};
  /// blocks[c] = sum over k of the (c, d, k) terms.
  std::vector<S> blocks;
};

/// Coefficient of g^m in I(g), with the c-summation cut at max_c. Odd m is 0.
template <class S>
FjCoefficient<S> fj_coefficient(unsigned m, const QParam& q, unsigned max_c) {
  detail::FloatScope<S> fs(q);
  FjCoefficient<S> out;
  if (m % 2 == 1) {
    out.blocks.assign(max_c + 1, S(0));
    return out;
  }
  const unsigned d = m / 2;
  const QTables<S> t(q, 2 * d + max_c, max_c + 3 * d);
  for (unsigned c = 0; c <= max_c; ++c) {
    S block(0);
    for (unsigned k = 0; k <= c; ++k) block += fj_term<S>(c, d, k, t);
    out.value += block;
    out.blocks.push_back(block);
  }
  return out;
}

/// fj_coefficient with max_c doubled from start_c until the newest block is
/// below tol times the value (or the value is exactly zero). Throws
/// TruncationError past max_c_cap.
template <class S>
FjCoefficient<S> fj_coefficient_converged(unsigned m, const QParam& q, const Rational& tol,
                                          unsigned start_c = 12, unsigned max_c_cap = 256) {
  detail::FloatScope<S> fs(q);
  const S t = scalar_cast<S>(tol);
  for (unsigned max_c = std::max(start_c, 1u);; max_c *= 2) {
    FjCoefficient<S> r = fj_coefficient<S>(m, q, max_c);
    if (r.value == S(0) || abs_value(r.blocks.back()) <= t * abs_value(r.value)) return r;
    if (max_c * 2 > max_c_cap) {
      throw TruncationError("series coefficient not settled within max_c = " + std::to_string(max_c));
    }
  }
}

/// I(g) as a power series through g^order.
template <class S>
PowerSeries<S> fj_series(unsigned order, const QParam& q, unsigned max_c) {
  PowerSeries<S> s(order);
  for (unsigned m = 0; m <= order; ++m) s[m] = fj_coefficient<S>(m, q, max_c).value;
  return s;
}

/// I(g) computed directly: the symmetric Jackson integral over [-nu, nu] of
/// E_{q^2} at -q^2 x^2/[2]_q + g x^3/[3]_q!, divided by c(q).
SumResult<Real> fj_numeric(const Real& g, const QParam& q, const TruncationPolicy& trunc = {});

/// Double expansion in x and g of E_{q^2}^{-q^2 x^2/[2]_q + g x^3/[3]_q!}
/// divided by the kernel E_{q^2}^{-q^2 x^2/[2]_q}: the coefficient of
/// x^{2c+3d} g^d is
///   sum_k (-1)^k C(d+k,k) q^{(d+k)(d+k-1)+2c} / ([2]_q^c ([3]_q!)^d [d+k]_{q^2}! [c-k]_{q^2}!).
/// Truncated at x-degree order_x and g-degree order_g; index order is
/// (x power, g power).
PowerSeries2<Rational> integrand_expansion(unsigned order_g, unsigned order_x, const QParam& q);

/// Integrates the g^{g_power} column of an expansion against the normalized
/// q-Gaussian, using the closed-form moments.
Rational integrate_expansion(const PowerSeries2<Rational>& expansion, unsigned g_power,
                             const QParam& q);

}  // namespace qfj
