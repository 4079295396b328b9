#pragma once

#include "qfj/power_series.hpp"
#include "qfj/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>

namespace qfj {

enum class TruncationMode { exact, floating };

/// How an infinite q-sum is cut off.
///
/// Exact mode sums exactly `max_terms` terms with rational arithmetic and
/// ignores the tolerance. Float mode stops as soon as the estimated tail drops
/// below `relative_tail_tolerance` times the running sum, summing at most
/// `max_terms` terms.
struct TruncationPolicy {
  std::size_t max_terms = 512;
  Rational relative_tail_tolerance = default_tolerance();
  TruncationMode mode = TruncationMode::floating;

  static Rational default_tolerance() { return ipow(Rational(10), -30); }
  static TruncationPolicy exact(std::size_t max_terms) {
    if (max_terms == 0) throw ValidationError("exact truncation needs max_terms >= 1");
    return {max_terms, default_tolerance(), TruncationMode::exact};
  }
  static TruncationPolicy floating(std::size_t max_terms = 512,
                                   Rational tolerance = default_tolerance()) {
    if (max_terms == 0) throw ValidationError("max_terms must be positive");
    if (tolerance < 0) throw ValidationError("tail tolerance must be non-negative");
    return {max_terms, std::move(tolerance), TruncationMode::floating};
  }
  bool is_exact() const noexcept { return mode == TruncationMode::exact; }
};

template <class F, class S>
concept RealFunction = std::invocable<const F&, const S&> &&
                       std::convertible_to<std::invoke_result_t<const F&, const S&>, S>;

/// Value of a truncated sum plus diagnostics.
template <class S>
struct SumResult {
  S value{0};
  std::size_t terms_used = 0;
  /// Magnitude of the last included term, scaled like `value`.
  S residual{0};
  /// False when float mode hit max_terms before meeting its tolerance.
  bool converged = true;
};

/// (f(qx) - f(x)) / ((q - 1) x). Undefined at x = 0.
template <class S, RealFunction<S> F>
S q_derivative(const F& f, const S& x, const QParam& q) {
  if (x == S(0)) throw DomainError("q-derivative is undefined at x = 0");
  const S qs = q.as<S>();
  return (S(f(qs * x)) - S(f(x))) / ((qs - S(1)) * x);
}

/// Jackson integral over [0, b]: (1-q) b sum_n q^n f(q^n b).
template <class S, RealFunction<S> F>
SumResult<S> jackson_integral(const F& f, const S& b, const QParam& q,
                              const TruncationPolicy& trunc = {}) {
  if (!(b > S(0))) throw DomainError("Jackson integral upper bound must be positive");
  const S qs = q.as<S>();
  const S one_minus_q = S(1) - qs;
  const S tol = scalar_cast<S>(trunc.relative_tail_tolerance);
  // tail after a term of size t is at most t q / (1 - q) when node values do
  // not grow toward the origin
  const S tail_factor = qs / one_minus_q;

  SumResult<S> out;
  S sum(0), weight(1), last(0);
  int quiet = 0;
  out.converged = trunc.is_exact();
  for (std::size_t n = 0; n < trunc.max_terms; ++n) {
    const S fx = f(S(weight * b));
    if (!is_finite_value(fx)) throw EvaluationError("non-finite integrand value", n);
    last = weight * fx;
    sum += last;
    weight *= qs;
    out.terms_used = n + 1;
    if (!trunc.is_exact()) {
      if (abs_value(last) * tail_factor <= tol * abs_value(sum)) {
        if (++quiet >= 2) {
          out.converged = true;
          break;
        }
      } else {
        quiet = 0;
      }
    }
  }
  out.value = one_minus_q * b * sum;
  out.residual = one_minus_q * b * abs_value(last);
  return out;
}

enum class Parity { unknown, even, odd };

/// Jackson integral over [-b, b] as the sum of the [-b, 0] and [0, b] parts.
/// A declared parity short-circuits: odd gives exact zero without evaluating f,
/// even gives twice the [0, b] part.
template <class S, RealFunction<S> F>
SumResult<S> jackson_integral_symmetric(const F& f, const S& b, const QParam& q,
                                        const TruncationPolicy& trunc = {},
                                        Parity parity = Parity::unknown) {
  if (parity == Parity::odd) {
    if (!(b > S(0))) throw DomainError("Jackson integral upper bound must be positive");
    return SumResult<S>{};
  }
  SumResult<S> right = jackson_integral<S>(f, b, q, trunc);
  if (parity == Parity::even) {
    right.value *= S(2);
    right.residual *= S(2);
    return right;
  }
  const auto reflected = [&f](const S& x) { return S(f(S(-x))); };
  SumResult<S> left = jackson_integral<S>(reflected, b, q, trunc);
  return {left.value + right.value, left.terms_used + right.terms_used,
          left.residual + right.residual, left.converged && right.converged};
}

// Polynomial integrands: the node sums are geometric series with closed forms,
// so these paths are exact and independent of truncation.

/// q-derivative of a polynomial in x: x^k -> [k]_q x^{k-1}.
QPolynomial q_derivative(const QPolynomial& f, const QParam& q);

/// Exact Jackson integral of a polynomial over [0, b]: x^k -> b^{k+1}/[k+1]_q.
Rational jackson_integral(const QPolynomial& f, const Rational& b, const QParam& q);

/// Exact Jackson integral of a polynomial over [-b, b].
Rational jackson_integral_symmetric(const QPolynomial& f, const Rational& b, const QParam& q);

/// Decimal digits of working precision adequate for float-mode q-series at q.
///
/// Alternating q-series such as the Gaussian kernel at the integration bound
/// carry terms up to about 1/(q^2;q^2)_inf, which grows like
/// exp(pi^2 / (6 |ln q^2|)) as q -> 1; the guard digits cover that cancellation.
unsigned working_digits(const QParam& q);

/// Number of terms after which a series with q^{n(n-1)/2}-type decay is below
/// 10^{-digits}; float-mode q-exponential sums of that kind may run this long
/// even when it exceeds the policy's max_terms.
std::size_t gaussian_series_cap(const QParam& q, unsigned digits, double decay_per_square = 0.5);

namespace detail {

/// Magnitude plan for a series with t_0 = 1 and t_{n+1} = t_n r_n, computed in
/// double precision from log10 |r_n|.
struct SeriesPlan {
  /// log10 of the largest |t_n|; never below 0
  double peak_log10 = 0;
  /// one past the first index after which |t_n| < 10^{-floor_digits}
  std::size_t end = 1;
};

template <class LogRatio>
SeriesPlan plan_series(LogRatio&& log_ratio, double floor_digits, std::size_t hard_cap = std::size_t{1} << 22) {
  SeriesPlan plan;
  double log_term = 0;
  for (std::size_t n = 0; n < hard_cap; ++n) {
    const double r = log_ratio(n);
    if (std::isnan(r) || r == -INFINITY) {
      plan.end = n + 1;
      return plan;
    }
    log_term += r;
    plan.peak_log10 = std::max(plan.peak_log10, log_term);
    if (r < 0 && log_term < -floor_digits) {
      plan.end = n + 2;
      return plan;
    }
  }
  throw DivergenceError("series terms do not decay");
}

/// Raises the Real precision so that a series whose terms peak at
/// 10^{peak_log10} still cancels down to the current precision, and returns
/// the number of terms needed to reach 10^{-(digits + 10)}.
template <class LogRatio>
std::size_t prepare_cancelling_series(LogRatio&& log_ratio, std::optional<PrecisionScope>& raised) {
  const unsigned digits = Real::default_precision();
  const SeriesPlan plan = plan_series(log_ratio, digits + 10.0);
  raised.emplace(digits + static_cast<unsigned>(std::ceil(plan.peak_log10)) + 10U);
  return plan.end;
}

/// log10 |x| in double precision, -inf for zero.
inline double log10_magnitude(const Real& x) {
  if (x == 0) return -INFINITY;
  return to_double(Real(log10(abs_value(x))));
}

/// Shared stopping logic for float-mode series whose terms eventually decay.
template <class S>
bool series_settled(const S& term, const S& previous, const S& sum, const S& tol) {
  return abs_value(term) <= abs_value(previous) && abs_value(term) <= tol * abs_value(sum);
}

}  // namespace detail

/// e_q^x = sum x^n / [n]_q!. Converges for |x (1-q)| < 1; terms that keep
/// growing for max_terms/2 consecutive steps raise DivergenceError.
template <class S>
SumResult<S> e_q(const S& x, const QParam& q, const TruncationPolicy& trunc = {}) {
  const S qs = q.as<S>();
  const S tol = scalar_cast<S>(trunc.relative_tail_tolerance);
  SumResult<S> out;
  out.converged = trunc.is_exact();
  S term(1), sum(0), bracket(0), qpow(1);
  std::size_t growing = 0;
  const std::size_t growth_limit = std::max<std::size_t>(trunc.max_terms / 2, 1);
  for (std::size_t n = 0; n < trunc.max_terms; ++n) {
    if (n > 0) {
      bracket += qpow;  // [n]_q
      qpow *= qs;
      const S next = term * x / bracket;
      growing = abs_value(next) > abs_value(term) ? growing + 1 : 0;
      if (growing >= growth_limit) {
        throw DivergenceError("e_q series terms keep growing; |x(1-q)| >= 1?");
      }
      const S previous = term;
      term = next;
      sum += term;
      out.terms_used = n + 1;
      if (!trunc.is_exact() && detail::series_settled(term, previous, sum, tol)) {
        out.converged = true;
        break;
      }
    } else {
      sum += term;
      out.terms_used = 1;
    }
  }
  out.value = sum;
  out.residual = abs_value(term);
  return out;
}

/// E_q^x = sum q^{n(n-1)/2} x^n / [n]_q!, an entire function.
template <class S>
SumResult<S> E_q(const S& x, const QParam& q, const TruncationPolicy& trunc = {}) {
  std::size_t cap = trunc.max_terms;
  std::optional<PrecisionScope> raised;
  if (!trunc.is_exact()) {
    if constexpr (std::is_same_v<S, Real>) {
      // terms can grow far beyond the result before the q^{n(n-1)/2} decay wins
      const double lq = std::log10(to_double(q.value()));
      const double lx = detail::log10_magnitude(x);
      double bracket = 0, qpow = 1;
      cap = std::max(cap, detail::prepare_cancelling_series(
                              [&](std::size_t n) {  // t_{n+1}/t_n = q^n x / [n+1]_q
                                bracket += qpow;
                                qpow *= to_double(q.value());
                                return static_cast<double>(n) * lq + lx - std::log10(bracket);
                              },
                              raised));
    } else {
      cap = std::max(cap, gaussian_series_cap(q, 20));
    }
  }
  const S qs = q.as<S>();
  const S tol = scalar_cast<S>(trunc.relative_tail_tolerance);
  SumResult<S> out;
  out.converged = trunc.is_exact();
  S term(1), sum(1), bracket(0), qpow(1);
  out.terms_used = 1;
  for (std::size_t n = 1; n < cap; ++n) {
    bracket += qpow;  // [n]_q
    const S previous = term;
    term = term * qpow * x / bracket;  // q^{n-1} x / [n]_q
    qpow *= qs;
    sum += term;
    out.terms_used = n + 1;
    if (!trunc.is_exact() && term != S(0) && detail::series_settled(term, previous, sum, tol)) {
      out.converged = true;
      break;
    }
    if (!trunc.is_exact() && term == S(0)) {
      out.converged = true;
      break;
    }
  }
  out.value = sum;
  out.residual = abs_value(term);
  return out;
}

/// Coefficients 1/[n]_q! of e_q, n = 0..order.
template <class S>
PowerSeries<S> e_q_series(std::size_t order, const QParam& q) {
  const S qs = q.as<S>();
  PowerSeries<S> s(order);
  S fact(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= q_number<S>(static_cast<unsigned>(n), qs);
    s[n] = S(1) / fact;
  }
  return s;
}

/// Coefficients q^{n(n-1)/2}/[n]_q! of E_q, n = 0..order.
template <class S>
PowerSeries<S> E_q_series(std::size_t order, const QParam& q) {
  const S qs = q.as<S>();
  PowerSeries<S> s(order);
  S fact(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= q_number<S>(static_cast<unsigned>(n), qs);
    s[n] = ipow(qs, n == 0 ? 0LL : static_cast<long long>(n * (n - 1) / 2)) / fact;
  }
  return s;
}

}  // namespace qfj
