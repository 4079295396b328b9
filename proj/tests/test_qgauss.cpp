#include <doctest.h>

#include "oracles.hpp"
#include "qfj/qgauss.hpp"

#include <numbers>

using namespace qfj;

namespace {
double diff(const Real& a, const Real& b) { return std::fabs(to_double(Real(a - b))); }
}  // namespace

TEST_CASE("integration bound") {
  const GaussBound b = nu(QParam::parse("3/4"));
  CHECK(b.nu_squared == 4);
  CHECK(std::fabs(to_double(b.value) - 2.0) < 1e-30);
}

TEST_CASE("kernel coefficients") {
  const Rational q(1, 2);
  CHECK(kernel_coefficient<Rational>(0, q) == 1);
  CHECK(kernel_coefficient<Rational>(1, q) == -q * q / (1 + q));
  // series coefficients of E_{q^2} at -q^2 x^2 / [2]_q
  const auto E = E_q_series<Rational>(6, QParam(q * q));
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(kernel_coefficient<Rational>(n, q) == E[n] * ipow(Rational(-q * q / (1 + q)), n));
  }
  const QPolynomial p = kernel_polynomial(QParam(q), 4);
  CHECK(p.degree() == 6);
  CHECK(p.coefficient(4) == kernel_coefficient<Rational>(2, q));
  CHECK(p.coefficient(3) == 0);
}

TEST_CASE("kernel at the Jackson nodes equals the infinite product") {
  for (const char* text : {"1/4", "1/2", "3/4", "9/10", "99/100"}) {
    const QParam q = QParam::parse(text);
    PrecisionScope scope(working_digits(q));
    const Real qr = q.as<Real>();
    const Real nu2 = Real(1) / (Real(1) - qr);
    for (unsigned j : {0u, 1u, 5u, 20u}) {
      const Real x2 = nu2 * ipow(qr, 2LL * j);
      const Real series = kernel_at_square<Real>(x2, q).value;
      const Real product = oracle::kernel_at_node(j, qr);
      CHECK(series > 0);
      CHECK(to_double(Real(abs_value(Real(series - product)) / product)) < 1e-30);
    }
  }
}

TEST_CASE("kernel near q = 1 at the bound survives the cancellation") {
  const QParam q = QParam::parse("999/1000");
  PrecisionScope scope(working_digits(q));
  const Real qr = q.as<Real>();
  const Real series = kernel_at_square<Real>(Real(1000), q).value;
  const Real product = oracle::kernel_at_node(0, qr);
  CHECK(to_double(Real(abs_value(Real(series - product)) / product)) < 1e-30);
}

TEST_CASE("kernel is even") {
  PrecisionScope scope(60);
  const QParam q = QParam::parse("1/3");
  CHECK(kernel_eval<Real>(Real("0.7"), q).value == kernel_eval<Real>(Real("-0.7"), q).value);
}

TEST_CASE("c(q): both methods agree and match an independent node sum") {
  for (const char* text : {"1/4", "1/2", "3/4", "9/10"}) {
    const QParam q = QParam::parse(text);
    // node sums decay like q^j, so 512 nodes fall short of 1e-30 at q = 9/10
    const auto trunc = TruncationPolicy::floating(2000);
    const auto a = c_of_q(q, trunc, NormalizationMethod::interchanged_sum);
    const auto b = c_of_q(q, trunc, NormalizationMethod::double_sum);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(diff(a.float_value, b.float_value) < 1e-12);
    // 2 (1-q) nu sum_j q^j K(q^j nu) from the product form
    PrecisionScope scope(working_digits(q));
    const Real qr = q.as<Real>();
    Real sum(0), w(1);
    for (int j = 0; j < 1200; ++j) {
      sum += w * oracle::kernel_at_node(static_cast<unsigned>(j), qr);
      w *= qr;
    }
    const Real expected = 2 * (1 - qr) * sqrt(Real(1) / (1 - qr)) * sum;
    CHECK(diff(a.float_value, expected) < 1e-25);
  }
}

TEST_CASE("c(q) in exact mode carries the surd") {
  const QParam q = QParam::parse("1/2");
  const auto exact = c_of_q(q, TruncationPolicy::exact(40));
  REQUIRE(exact.surd_value);
  CHECK(exact.surd_value->surd_exponent() == 1);
  const auto floating = c_of_q(q);
  PrecisionScope scope(60);
  CHECK(diff(exact.surd_value->to_real(q), floating.float_value) < 1e-30);
  const auto dbl = c_of_q(q, TruncationPolicy::exact(30), NormalizationMethod::double_sum);
  REQUIRE(dbl.surd_value);
  CHECK(diff(dbl.float_value, floating.float_value) < 1e-8);
  CHECK(to_string(NormalizationMethod::double_sum) == "double_sum");
}

TEST_CASE("c(q) approaches sqrt(2 pi) monotonically") {
  const double target = std::sqrt(2 * std::numbers::pi);
  double previous = 1;
  for (const char* text : {"9/10", "99/100", "999/1000"}) {
    const double err = std::fabs(to_double(c_of_q(QParam::parse(text)).float_value) - target);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("moments match the closed form and the product-kernel oracle") {
  for (const char* text : {"1/4", "1/2", "3/4"}) {
    const QParam q = QParam::parse(text);
    for (unsigned n = 0; n <= 5; ++n) {
      const auto m = moment_by_integration(2 * n, q);
      const Rational closed = moment_closed_form(n).eval(q);
      CHECK(closed == oracle::double_factorial(n, q.value()));
      CHECK(diff(m.value, Real(closed)) < 1e-8);
      PrecisionScope scope(working_digits(q));
      CHECK(diff(m.value, oracle::moment_from_product(n, q.value(), 600)) < 1e-25);
    }
  }
}

TEST_CASE("odd moments are exactly zero") {
  for (unsigned k = 1; k <= 11; k += 2) {
    const auto m = moment_by_integration(k, QParam::parse("2/5"));
    REQUIRE(m.exact_value);
    CHECK(*m.exact_value == 0);
    CHECK(m.terms_used == 0);
  }
}

TEST_CASE("moment recursion") {
  for (const char* text : {"1/4", "1/2", "3/4"}) {
    const QParam q = QParam::parse(text);
    for (unsigned n = 0; n <= 4; ++n) {
      const Real ratio = moment_by_integration(2 * n + 2, q).value / moment_by_integration(2 * n, q).value;
      CHECK(diff(ratio, Real(oracle::bracket(2 * n + 1, q.value()))) < 1e-8);
    }
  }
}

TEST_CASE("exact-mode moments are rational and converge to the closed form") {
  const QParam q = QParam::parse("1/2");
  const auto m = moment_by_integration(4, q, TruncationPolicy::exact(30));
  REQUIRE(m.exact_value);
  CHECK(std::fabs(to_double(Rational(*m.exact_value - Rational(7, 4)))) < 1e-15);
}

TEST_CASE("fourth moment tends to 3") {
  const auto trunc = TruncationPolicy::floating(20000);
  const double e1 = std::fabs(to_double(moment_by_integration(4, QParam::parse("9/10"), trunc).value) - 3);
  const double e2 = std::fabs(to_double(moment_by_integration(4, QParam::parse("99/100"), trunc).value) - 3);
  CHECK(e2 < e1);
}

TEST_CASE("insufficient node budget raises TruncationError") {
  CHECK_THROWS_AS(moment_by_integration(2, QParam::parse("99/100"), TruncationPolicy::floating(50)),
                  TruncationError);
}

TEST_CASE("integrate_over_bound") {
  const QParam q = QParam::parse("1/2");
  // int_{-nu}^{nu} 1 d_q x = 2 nu = 2 * sqrt(1-q) / (1-q)
  const QScalar v = integrate_over_bound(QPolynomial::constant(1), q);
  CHECK(v.surd_exponent() == 1);
  CHECK(v.rational_part() == 4);
}
