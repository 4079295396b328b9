#pragma once

#include "qfj/errors.hpp"
#include "qfj/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qfj {

/// The deformation parameter: an exact rational strictly inside (0, 1).
class QParam {
public:
  explicit QParam(Rational value);
  static QParam parse(std::string_view text) { return QParam(parse_rational(text)); }

  const Rational& value() const noexcept { return value_; }

  template <class S>
  S as() const {
    return scalar_cast<S>(value_);
  }

  friend bool operator==(const QParam&, const QParam&) = default;

private:
  Rational value_;
};

/// Exact rational, optionally multiplied by the surd (1-q)^{1/2}.
///
/// Like-surd values add exactly. Products and quotients that would create or
/// remove a full factor (1-q) need q, so they go through multiply()/divide().
class QScalar {
public:
  QScalar() = default;
  QScalar(Rational rational, int surd_exponent = 0);

  const Rational& rational_part() const noexcept { return rational_; }
  int surd_exponent() const noexcept { return surd_; }
  bool has_surd() const noexcept { return surd_ != 0; }

  QScalar operator-() const { return {-rational_, surd_}; }
  QScalar& operator+=(const QScalar& rhs);
  QScalar& operator-=(const QScalar& rhs);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }

  /// Exact product; throws SurdMismatchError when both operands carry the surd.
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  /// Exact quotient; throws SurdMismatchError for plain / surd.
  friend QScalar operator/(const QScalar& a, const QScalar& b);

  friend bool operator==(const QScalar&, const QScalar&) = default;

  /// Numeric value at q (the surd evaluated in the current Real precision).
  Real to_real(const QParam& q) const;
  std::string to_string() const;

private:
  Rational rational_{0};
  int surd_ = 0;
};

/// General product and quotient, folding surd^2 = (1-q) into the rational part.
QScalar multiply(const QScalar& a, const QScalar& b, const QParam& q);
QScalar divide(const QScalar& a, const QScalar& b, const QParam& q);

/// Univariate polynomial with exact rational coefficients, indexed by degree.
/// The indeterminate is q for every q-number; the same type also carries
/// polynomial integrands in x.
class QPolynomial {
public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<Rational> coefficients);
  explicit QPolynomial(std::vector<Rational> coefficients);
  static QPolynomial constant(const Rational& c) { return QPolynomial({c}); }
  static QPolynomial monomial(std::size_t degree, const Rational& coefficient = Rational(1));

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational coefficient(std::size_t degree) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const Rational& rhs);
  QPolynomial operator-() const;
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const Rational& b) { return a *= b; }
  friend QPolynomial operator*(const Rational& a, QPolynomial b) { return b *= a; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  QPolynomial pow(unsigned exponent) const;
  /// p(q) -> p(q^k).
  QPolynomial substitute_power(unsigned k) const;
  /// p(x) -> p(s x).
  QPolynomial dilate(const Rational& s) const;

  template <class S>
  S eval(const S& at) const {
    S acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * at + scalar_cast<S>(*it);
    }
    return acc;
  }
  Rational eval(const QParam& q) const { return eval(q.value()); }

  /// Human-readable form, highest-degree-last: "1 + q + q^2".
  std::string to_string(std::string_view variable = "q") const;

private:
  void normalize();
  std::vector<Rational> coefficients_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QPolynomial q_bracket(unsigned n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
QPolynomial q_factorial(unsigned n);

/// Product of the n odd brackets [1]_q [3]_q ... [2n-1]_q, i.e. [2n-1]_q!!.
/// Indexed by the number of factors, so q_double_factorial(0) = 1.
QPolynomial q_double_factorial(unsigned n);

/// [n]_{q^2}!, the q-factorial with q replaced by q^2.
QPolynomial q_squared_factorial(unsigned n);

/// Ordinary binomial coefficient; zero when k > n.
Integer binomial(long n, long k);

/// (q^t - 1)/(q - 1) for real t.
template <class S>
S q_bracket_real(const S& t, const S& q) {
  using std::pow;
  using boost::multiprecision::pow;
  return (S(pow(q, t)) - S(1)) / (q - S(1));
}

/// Exact variant for integer t (negative t allowed).
Rational q_bracket_real(long t, const QParam& q);

// Scalar-valued q-numbers, used where polynomial arithmetic would be wasteful.

template <class S>
S q_number(unsigned n, const S& q) {
  S acc(0), p(1);
  for (unsigned i = 0; i < n; ++i) {
    acc += p;
    p *= q;
  }
  return acc;
}

template <class S>
S q_factorial_value(unsigned n, const S& q) {
  S acc(1);
  for (unsigned k = 2; k <= n; ++k) acc *= q_number(k, q);
  return acc;
}

template <class S>
S q_double_factorial_value(unsigned n, const S& q) {
  S acc(1);
  for (unsigned k = 2; k <= n; ++k) acc *= q_number(2 * k - 1, q);
  return acc;
}

/// (2n-1)!! as an exact integer.
Integer double_factorial_odd(unsigned n);

}  // namespace qfj
