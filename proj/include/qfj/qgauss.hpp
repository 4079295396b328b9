#pragma once

#include "qfj/qcalc.hpp"

#include <optional>
#include <string_view>

namespace qfj {

/// The integration bound nu = 1/sqrt(1-q); nu^2 is rational.
struct GaussBound {
  Rational nu_squared;
  Real value;
};

GaussBound nu(const QParam& q);

/// Coefficient of x^{2n} in the q-Gaussian kernel E_{q^2}^{-q^2 x^2/[2]_q}:
/// (-1)^n q^{n(n+1)} / ((1+q)^n [n]_{q^2}!).
template <class S>
S kernel_coefficient(unsigned n, const S& q) {
  const S q2 = q * q;
  S value = ipow(q, static_cast<long long>(n) * (n + 1)) /
            (ipow(S(1) + q, n) * q_factorial_value<S>(n, q2));
  return (n % 2 == 0) ? value : S(-value);
}

/// The kernel evaluated through x^2 only, so rational x^2 stays exact.
template <class S>
SumResult<S> kernel_at_square(const S& x_squared, const QParam& q,
                              const TruncationPolicy& trunc = {}) {
  std::size_t cap = trunc.max_terms;
  std::optional<PrecisionScope> raised;
  if (!trunc.is_exact()) {
    if constexpr (std::is_same_v<S, Real>) {
      // near the bound the alternating terms peak far above the kernel value
      const double qd = to_double(q.value());
      const double lq = std::log10(qd);
      const double lx = detail::log10_magnitude(x_squared) - std::log10(1 + qd);
      double bracket = 0, q2pow = 1;
      cap = std::max(cap, detail::prepare_cancelling_series(
                              [&](std::size_t n) {  // |t_{n+1}/t_n| = q^{2n+2} x^2 / ((1+q) [n+1]_{q^2})
                                bracket += q2pow;
                                q2pow *= qd * qd;
                                return (2.0 * n + 2.0) * lq + lx - std::log10(bracket);
                              },
                              raised));
    } else {
      cap = std::max(cap, gaussian_series_cap(q, 20, 1.0));
    }
  }
  const S qs = q.as<S>();
  const S q2 = qs * qs;
  const S tol = scalar_cast<S>(trunc.relative_tail_tolerance);
  SumResult<S> out;
  out.converged = trunc.is_exact();
  S term(1), sum(1), bracket(0), q2pow(1);
  // t_{n+1} / t_n = -q^{2n+2} x^2 / ((1+q) [n+1]_{q^2})
  const S ratio_base = x_squared / (S(1) + qs);
  S qpow = q2;
  out.terms_used = 1;
  for (std::size_t n = 0; n + 1 < cap; ++n) {
    bracket += q2pow;  // [n+1]_{q^2}
    q2pow *= q2;
    const S previous = term;
    term = -term * qpow * ratio_base / bracket;
    qpow *= q2;
    sum += term;
    out.terms_used = n + 2;
    if (!trunc.is_exact() && (term == S(0) || detail::series_settled(term, previous, sum, tol))) {
      out.converged = true;
      break;
    }
  }
  out.value = sum;
  out.residual = abs_value(term);
  return out;
}

/// q-Gaussian kernel E_{q^2}^{-q^2 x^2/[2]_q}, an even entire function.
template <class S>
SumResult<S> kernel_eval(const S& x, const QParam& q, const TruncationPolicy& trunc = {}) {
  return kernel_at_square<S>(S(x * x), q, trunc);
}

/// Truncated kernel as an even polynomial in x with max_terms terms.
QPolynomial kernel_polynomial(const QParam& q, std::size_t terms);

enum class NormalizationMethod { double_sum, interchanged_sum };

std::string_view to_string(NormalizationMethod m);

/// c(q) written as r * sqrt(1-q).
struct NormalizationResult {
  /// Present in exact mode: the exact rational r with surd exponent 1.
  std::optional<QScalar> surd_value;
  Real float_value;
  NormalizationMethod method = NormalizationMethod::interchanged_sum;
  std::size_t terms_used = 0;
  bool converged = true;
};

/// Normalization constant c(q) of the q-Gaussian measure on [-nu, nu].
///
/// interchanged_sum is the single-index series
///   2 sqrt(1-q) sum_m (-1)^m q^{m(m+1)} / ((1-q^{2m+1}) (1-q^2)^m [m]_{q^2}!)
/// and is the production route. double_sum Jackson-integrates the kernel node
/// by node; it exists to cross-check the interchange of summation.
NormalizationResult c_of_q(const QParam& q, const TruncationPolicy& trunc = {},
                           NormalizationMethod method = NormalizationMethod::interchanged_sum);

/// The 2n-th moment in closed form, [2n-1]_q!!.
QPolynomial moment_closed_form(unsigned n);

struct MomentResult {
  /// Present in exact mode and for odd k.
  std::optional<Rational> exact_value;
  Real value;
  std::size_t terms_used = 0;
  Real residual;
};

/// k-th moment (1/c(q)) int_{-nu}^{nu} kernel(x) x^k d_q x by Jackson
/// integration. Odd k is exactly zero. Float mode sums kernel values at the
/// nodes q^j nu and throws TruncationError if the node sum has not reached its
/// tolerance within max_terms; exact mode integrates the kernel truncated to
/// max_terms terms monomial by monomial, so the sqrt(1-q) factors cancel and
/// the result is rational.
MomentResult moment_by_integration(unsigned k, const QParam& q, const TruncationPolicy& trunc = {});

/// Exact int_{-nu}^{nu} p(x) d_q x for a polynomial p, as r * sqrt(1-q).
QScalar integrate_over_bound(const QPolynomial& p, const QParam& q);

}  // namespace qfj
