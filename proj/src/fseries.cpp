#include "qfj/fseries.hpp"

namespace qfj {

LambdaTable lambda_table(unsigned max_c, unsigned max_d, const QParam& q) {
  LambdaTable table(q, max_c, max_d);
  for (unsigned c = 0; c <= max_c; ++c) {
    for (unsigned d = 0; d <= max_d; ++d) table.at(c, d) = lambda_closed_form<Rational>(c, d, q);
  }
  return table;
}

PowerSeries2<Rational> E_q2_in_x(std::size_t total_degree, const QParam& q) {
  const QParam q2(q.value() * q.value());
  const PowerSeries<Rational> coeffs = E_q_series<Rational>(total_degree, q2);
  PowerSeries2<Rational> s(total_degree);
  for (std::size_t n = 0; n <= total_degree; ++n) s.set(n, 0, coeffs[n]);
  return s;
}

PowerSeries2<Rational> E_q2_of_sum(std::size_t total_degree, const QParam& q) {
  const QParam q2(q.value() * q.value());
  const PowerSeries<Rational> coeffs = E_q_series<Rational>(total_degree, q2);
  PowerSeries2<Rational> z(total_degree);
  if (total_degree >= 1) {
    z.set(1, 0, Rational(1));
    z.set(0, 1, Rational(1));
  }
  PowerSeries2<Rational> power(total_degree);
  power.set(0, 0, Rational(1));
  PowerSeries2<Rational> result(total_degree);
  for (std::size_t n = 0; n <= total_degree; ++n) {
    power.for_each_index([&](std::size_t c, std::size_t d) {
      result.add(c, d, coeffs[n] * power.coefficient(c, d));
    });
    power = power * z;
  }
  return result;
}

LambdaTable lambda_oracle(unsigned max_c, unsigned max_d, const QParam& q) {
  const std::size_t degree = max_c + max_d;
  const PowerSeries2<Rational> ratio = divide(E_q2_of_sum(degree, q), E_q2_in_x(degree, q));
  LambdaTable table(q, max_c, max_d);
  for (unsigned c = 0; c <= max_c; ++c) {
    for (unsigned d = 0; d <= max_d; ++d) table.at(c, d) = ratio.coefficient(c, d);
  }
  return table;
}

RationalFunction fj_term_rational_function(unsigned c, unsigned d, unsigned k) {
  if (k > c) throw DomainError("fj term needs k <= c");
  const unsigned n = 2 * d + k;
  const std::size_t exponent = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) + 2 * c;
  Rational sign_binomial{binomial(n, k)};
  if (k % 2 == 1) sign_binomial = -sign_binomial;
  RationalFunction f;
  f.numerator = QPolynomial::monomial(exponent, sign_binomial) * q_double_factorial(c + 3 * d);
  f.denominator = q_bracket(2).pow(c) * q_factorial(3).pow(2 * d) * q_squared_factorial(n) *
                  q_squared_factorial(c - k);
  return f;
}

SumResult<Real> fj_numeric(const Real& g, const QParam& q, const TruncationPolicy& trunc) {
  PrecisionScope scope(working_digits(q));
  const QParam q2(q.value() * q.value());
  const Real qr = q.as<Real>();
  const Real quad = qr * qr / (Real(1) + qr);                      // q^2 / [2]_q
  const Real cubic = Real(g) / ((Real(1) + qr) * (Real(1) + qr + qr * qr));  // g / [3]_q!
  const auto integrand = [&](const Real& x) {
    const Real x2 = x * x;
    const Real argument = -quad * x2 + cubic * x2 * x;
    return E_q<Real>(argument, q2, trunc).value;
  };
  const Real bound = nu(q).value;
  SumResult<Real> integral = jackson_integral_symmetric<Real>(integrand, bound, q, trunc);
  const NormalizationResult c = c_of_q(q, trunc);
  integral.value /= c.float_value;
  integral.residual /= c.float_value;
  integral.converged = integral.converged && c.converged;
  return integral;
}

PowerSeries2<Rational> integrand_expansion(unsigned order_g, unsigned order_x, const QParam& q) {
  PowerSeries2<Rational> out(order_x, order_g, order_x + order_g);
  const unsigned max_c = order_x / 2;
  const QTables<Rational> t(q, order_g + max_c, 0);
  for (unsigned d = 0; d <= order_g; ++d) {
    for (unsigned c = 0; 2 * c + 3 * d <= order_x; ++c) {
      Rational coeff(0);
      for (unsigned k = 0; k <= c; ++k) {
        const unsigned n = d + k;
        Rational term = Rational(binomial(n, k)) *
                        ipow(t.q, static_cast<long long>(n) * (n > 0 ? n - 1 : 0) + 2LL * c) /
                        (ipow(t.bracket2, c) * ipow(t.factorial3, d) * t.fact_q2[n] * t.fact_q2[c - k]);
        coeff += (k % 2 == 0) ? term : Rational(-term);
      }
      out.set(2 * c + 3 * d, d, coeff);
    }
  }
  return out;
}

Rational integrate_expansion(const PowerSeries2<Rational>& expansion, unsigned g_power,
                             const QParam& q) {
  Rational acc(0);
  for (std::size_t p = 0; p <= expansion.max_x(); p += 2) {
    const Rational coeff = expansion.coefficient(p, g_power);
    if (coeff == 0) continue;
    acc += coeff * moment_closed_form(static_cast<unsigned>(p / 2)).eval(q);
  }
  return acc;
}

}  // namespace qfj
