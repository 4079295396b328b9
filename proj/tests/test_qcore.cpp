#include <doctest.h>

#include "oracles.hpp"
#include "qfj/qcore.hpp"

#include <random>

using namespace qfj;

TEST_CASE("QParam validates 0 < q < 1") {
  CHECK(QParam::parse("1/2").value() == Rational(1, 2));
  CHECK_THROWS_AS(QParam(Rational(0)), DomainError);
  CHECK_THROWS_AS(QParam(Rational(1)), DomainError);
  CHECK_THROWS_AS(QParam(Rational(-1, 2)), DomainError);
  CHECK_THROWS_AS(QParam(Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(QParam::parse("x"), ParseError);
}

TEST_CASE("q-brackets and factorials as polynomials") {
  CHECK(q_bracket(0).is_zero());
  CHECK(q_bracket(1) == QPolynomial{Rational(1)});
  CHECK(q_bracket(3) == QPolynomial({Rational(1), Rational(1), Rational(1)}));
  CHECK(q_bracket(3).to_string() == "1 + q + q^2");
  CHECK(q_factorial(0) == QPolynomial::constant(1));
  CHECK(q_factorial(3) == q_bracket(2) * q_bracket(3));
  CHECK(q_double_factorial(0) == QPolynomial::constant(1));
  CHECK(q_double_factorial(3) == q_bracket(1) * q_bracket(3) * q_bracket(5));
  CHECK(q_squared_factorial(2) == q_bracket(2).substitute_power(2));
}

TEST_CASE("q-numbers agree with the geometric-ratio form at random q") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const QParam q(oracle::random_q(rng));
    const unsigned n = static_cast<unsigned>(trial % 9);
    CHECK(q_bracket(n).eval(q) == oracle::bracket(n, q.value()));
    CHECK(q_factorial(n).eval(q) == oracle::factorial(n, q.value()));
    CHECK(q_double_factorial(n).eval(q) == oracle::double_factorial(n, q.value()));
    const Rational q2 = q.value() * q.value();
    CHECK(q_squared_factorial(n).eval(q) == oracle::factorial(n, q2));
    CHECK(q_number<Rational>(n, q.value()) == oracle::bracket(n, q.value()));
    CHECK(q_factorial_value<Rational>(n, q.value()) == oracle::factorial(n, q.value()));
    CHECK(q_double_factorial_value<Rational>(n, q.value()) == oracle::double_factorial(n, q.value()));
  }
}

TEST_CASE("q-numbers reduce to integers at q = 1") {
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(q_bracket(n).eval(Rational(1)) == n);
    CHECK(q_double_factorial(n).eval(Rational(1)) == Rational(double_factorial_odd(n)));
  }
}

TEST_CASE("real-argument q-bracket") {
  CHECK(q_bracket_real(2, QParam::parse("1/2")) == Rational(3, 2));
  CHECK(q_bracket_real(-1, QParam::parse("1/2")) == Rational(-2));
  CHECK(std::fabs(q_bracket_real<double>(0.5, 0.25) - (std::sqrt(0.25) - 1) / (0.25 - 1)) < 1e-15);
}

TEST_CASE("binomial") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  }
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(4) == 105);
}

TEST_CASE("polynomial arithmetic") {
  const QPolynomial a{Rational(1), Rational(2)};
  const QPolynomial b{Rational(-1), Rational(0), Rational(3)};
  CHECK(a + b == QPolynomial({Rational(0), Rational(2), Rational(3)}));
  CHECK(a - a == QPolynomial{});
  CHECK(a * b == QPolynomial({Rational(-1), Rational(-2), Rational(3), Rational(6)}));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.dilate(Rational(1, 2)) == QPolynomial({Rational(1), Rational(1)}));
  CHECK(b.degree() == 2);
  CHECK(QPolynomial{}.degree() == -1);
  CHECK(QPolynomial::monomial(2, Rational(-1)).to_string() == "-q^2");
  CHECK(QPolynomial::monomial(1, Rational(1, 2)).to_string() == "1/2*q");
  CHECK(QPolynomial{}.to_string() == "0");
  CHECK(b.eval(Rational(2)) == 11);
}

TEST_CASE("QScalar surd arithmetic") {
  const QParam q = QParam::parse("3/4");
  const QScalar plain(Rational(2));
  const QScalar s1(Rational(1, 2), 1);
  const QScalar s2(Rational(3), 1);
  CHECK(s1 + s2 == QScalar(Rational(7, 2), 1));
  CHECK_THROWS_AS(plain + s1, SurdMismatchError);
  CHECK(plain * s1 == QScalar(Rational(1), 1));
  CHECK_THROWS_AS(s1 * s2, SurdMismatchError);
  CHECK(s2 / s1 == QScalar(Rational(6)));
  CHECK_THROWS_AS(plain / s1, SurdMismatchError);
  // surd^2 = 1 - q
  CHECK(multiply(s1, s2, q) == QScalar(Rational(3, 2) * Rational(1, 4)));
  CHECK(divide(plain, s1, q) == QScalar(Rational(4) / Rational(1, 4), 1));
  CHECK(QScalar(Rational(0), 1).surd_exponent() == 0);
  CHECK(s1.to_string() == "1/2*sqrt(1-q)");
  PrecisionScope scope(40);
  CHECK(std::fabs(to_double(s2.to_real(q)) - 1.5) < 1e-15);
}
