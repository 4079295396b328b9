#include "qfj/qcore.hpp"

#include <sstream>
#include <utility>

namespace qfj {

QParam::QParam(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ >= 1) {
    throw DomainError("q must lie strictly between 0 and 1, got " + format_rational(value_));
  }
}

// ---------------------------------------------------------------------------
// QScalar

QScalar::QScalar(Rational rational, int surd_exponent)
    : rational_(std::move(rational)), surd_(surd_exponent) {
  if (surd_ != 0 && surd_ != 1) throw DomainError("surd exponent must be 0 or 1");
  if (rational_ == 0) surd_ = 0;
}

QScalar& QScalar::operator+=(const QScalar& rhs) {
  if (rhs.rational_ == 0) return *this;
  if (rational_ == 0) return *this = rhs;
  if (surd_ != rhs.surd_) throw SurdMismatchError("cannot add scalars with different surd factors");
  rational_ += rhs.rational_;
  if (rational_ == 0) surd_ = 0;
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) { return *this += -rhs; }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.surd_ + b.surd_ > 1) {
    throw SurdMismatchError("product of two surd scalars needs q; use multiply()");
  }
  return QScalar(a.rational_ * b.rational_, a.surd_ + b.surd_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  if (b.rational_ == 0) throw DomainError("division by zero scalar");
  if (b.surd_ > a.surd_ && a.rational_ != 0) {
    throw SurdMismatchError("plain / surd quotient needs q; use divide()");
  }
  return QScalar(a.rational_ / b.rational_, a.surd_ - (a.rational_ == 0 ? 0 : b.surd_));
}

QScalar multiply(const QScalar& a, const QScalar& b, const QParam& q) {
  const int s = a.surd_exponent() + b.surd_exponent();
  Rational r = a.rational_part() * b.rational_part();
  if (s == 2) return QScalar(r * (1 - q.value()), 0);
  return QScalar(std::move(r), s);
}

QScalar divide(const QScalar& a, const QScalar& b, const QParam& q) {
  if (b.rational_part() == 0) throw DomainError("division by zero scalar");
  const int s = a.surd_exponent() - b.surd_exponent();
  Rational r = a.rational_part() / b.rational_part();
  // 1/sqrt(1-q) = sqrt(1-q)/(1-q)
  if (s == -1) return QScalar(r / (1 - q.value()), 1);
  return QScalar(std::move(r), s);
}

Real QScalar::to_real(const QParam& q) const {
  Real v(rational_);
  if (surd_ == 1) v *= sqrt(Real(1 - q.value()));
  return v;
}

std::string QScalar::to_string() const {
  std::string s = format_rational(rational_);
  if (surd_ == 1) s += "*sqrt(1-q)";
  return s;
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients) {
  normalize();
}

QPolynomial::QPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

QPolynomial QPolynomial::monomial(std::size_t degree, const Rational& coefficient) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coefficient;
  return QPolynomial(std::move(c));
}

void QPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational QPolynomial::coefficient(std::size_t degree) const {
  return degree < coefficients_.size() ? coefficients_[degree] : Rational(0);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) { return *this += -rhs; }

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial& QPolynomial::operator*=(const Rational& rhs) {
  for (auto& c : coefficients_) c *= rhs;
  normalize();
  return *this;
}

QPolynomial QPolynomial::pow(unsigned exponent) const {
  QPolynomial result{Rational(1)};
  QPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

QPolynomial QPolynomial::substitute_power(unsigned k) const {
  if (is_zero()) return {};
  if (k == 0) return constant(eval(Rational(1)));
  std::vector<Rational> c((coefficients_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i * k] = coefficients_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::dilate(const Rational& s) const {
  std::vector<Rational> c = coefficients_;
  Rational p(1);
  for (auto& coef : c) {
    coef *= p;
    p *= s;
  }
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << format_rational(mag);
      continue;
    }
    if (mag != 1) out << format_rational(mag) << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// q-numbers

QPolynomial q_bracket(unsigned n) {
  return QPolynomial(std::vector<Rational>(n, Rational(1)));
}

QPolynomial q_factorial(unsigned n) {
  QPolynomial acc{Rational(1)};
  for (unsigned k = 2; k <= n; ++k) acc *= q_bracket(k);
  return acc;
}

QPolynomial q_double_factorial(unsigned n) {
  QPolynomial acc{Rational(1)};
  for (unsigned k = 2; k <= n; ++k) acc *= q_bracket(2 * k - 1);
  return acc;
}

QPolynomial q_squared_factorial(unsigned n) { return q_factorial(n).substitute_power(2); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("binomial arguments must be non-negative");
  if (k > n) return Integer(0);
  k = std::min(k, n - k);
  Integer r(1);
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Rational q_bracket_real(long t, const QParam& q) {
  return (ipow(q.value(), t) - 1) / (q.value() - 1);
}

Integer double_factorial_odd(unsigned n) {
  Integer r(1);
  for (unsigned k = 2; k <= n; ++k) r *= 2 * k - 1;
  return r;
}

}  // namespace qfj
