#include "qfj/qcalc.hpp"

#include <cmath>
#include <numbers>

namespace qfj {

QPolynomial q_derivative(const QPolynomial& f, const QParam& q) {
  const auto& c = f.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> d(c.size() - 1, Rational(0));
  for (std::size_t k = 1; k < c.size(); ++k) {
    d[k - 1] = c[k] * q_number<Rational>(static_cast<unsigned>(k), q.value());
  }
  return QPolynomial(std::move(d));
}

Rational jackson_integral(const QPolynomial& f, const Rational& b, const QParam& q) {
  if (b <= 0) throw DomainError("Jackson integral upper bound must be positive");
  Rational acc(0);
  Rational bpow = b;
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) acc += c[k] * bpow / q_number<Rational>(static_cast<unsigned>(k + 1), q.value());
    bpow *= b;
  }
  return acc;
}

Rational jackson_integral_symmetric(const QPolynomial& f, const Rational& b, const QParam& q) {
  // odd monomials cancel between the two halves
  std::vector<Rational> even(f.coefficients());
  for (std::size_t k = 1; k < even.size(); k += 2) even[k] = 0;
  return 2 * jackson_integral(QPolynomial(std::move(even)), b, q);
}

unsigned working_digits(const QParam& q) {
  const double qd = to_double(q.value());
  const double eps = -std::log(qd * qd);
  const double magnitude = std::numbers::pi * std::numbers::pi / (6.0 * eps) / std::log(10.0);
  return 50U + static_cast<unsigned>(std::ceil(1.2 * magnitude));
}

std::size_t gaussian_series_cap(const QParam& q, unsigned digits, double decay_per_square) {
  const double qd = to_double(q.value());
  const double needed = (digits + 10.0) * std::log(10.0) / (-std::log(qd) * decay_per_square);
  return static_cast<std::size_t>(std::ceil(std::sqrt(needed))) + 32;
}

}  // namespace qfj
