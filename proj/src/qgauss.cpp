#include "qfj/qgauss.hpp"

namespace qfj {

GaussBound nu(const QParam& q) {
  Rational nu2 = 1 / (1 - q.value());
  return {nu2, sqrt(Real(nu2))};
}

QPolynomial kernel_polynomial(const QParam& q, std::size_t terms) {
  std::vector<Rational> c(terms == 0 ? 0 : 2 * terms - 1, Rational(0));
  for (std::size_t n = 0; n < terms; ++n) {
    c[2 * n] = kernel_coefficient<Rational>(static_cast<unsigned>(n), q.value());
  }
  return QPolynomial(std::move(c));
}

std::string_view to_string(NormalizationMethod m) {
  return m == NormalizationMethod::double_sum ? "double_sum" : "interchanged_sum";
}

QScalar integrate_over_bound(const QPolynomial& p, const QParam& q) {
  const Rational& qv = q.value();
  const Rational inv = 1 / (1 - qv);
  Rational acc(0);
  Rational scale = 2 * inv;  // 2 / (1-q)^{j+1}
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); k += 2) {
    if (c[k] != 0) acc += c[k] * scale / q_number<Rational>(static_cast<unsigned>(k + 1), qv);
    scale *= inv;
  }
  return QScalar(acc, 1);
}

namespace {

template <class S>
SumResult<S> interchanged_series(const QParam& q, const TruncationPolicy& trunc) {
  const S qs = q.as<S>();
  const S q2 = qs * qs;
  const S tol = scalar_cast<S>(trunc.relative_tail_tolerance);
  std::size_t cap = trunc.max_terms;
  if (!trunc.is_exact()) {
    if constexpr (std::is_same_v<S, Real>) {
      cap = std::max(cap, gaussian_series_cap(q, Real::default_precision(), 1.0));
    }
  }
  SumResult<S> out;
  out.converged = trunc.is_exact();
  // running pieces: q^{m(m+1)}, (1-q^2)^m [m]_{q^2}! = prod_{i<=m} (1 - q^{2i})
  S qexp(1), poch(1), q2m(1), q2m1 = qs, sum(0), term(0);
  for (std::size_t m = 0; m < cap; ++m) {
    if (m > 0) {
      qexp *= q2m * q2 ;  // q^{m(m+1)} = q^{(m-1)m} q^{2m}
      q2m *= q2;          // q^{2m}
      poch *= S(1) - q2m;
      q2m1 *= q2;         // q^{2m+1}
    }
    const S previous = term;
    term = qexp / ((S(1) - q2m1) * poch);
    if (m % 2 == 1) term = -term;
    sum += term;
    out.terms_used = m + 1;
    if (!trunc.is_exact() && m > 0 && detail::series_settled(term, previous, sum, tol)) {
      out.converged = true;
      break;
    }
  }
  out.value = S(2) * sum;
  out.residual = S(2) * abs_value(term);
  return out;
}

}  // namespace

NormalizationResult c_of_q(const QParam& q, const TruncationPolicy& trunc,
                           NormalizationMethod method) {
  PrecisionScope scope(working_digits(q));
  NormalizationResult out;
  out.method = method;
  const Real surd = sqrt(Real(1 - q.value()));

  if (trunc.is_exact()) {
    Rational r;
    if (method == NormalizationMethod::interchanged_sum) {
      auto s = interchanged_series<Rational>(q, trunc);
      r = s.value;
      out.terms_used = s.terms_used;
    } else {
      // c = 2 (1-q) nu sum_n q^n K(q^n nu) and (1-q) nu = sqrt(1-q); node
      // values depend on (q^n nu)^2 = q^{2n} / (1-q) only
      const Rational& qv = q.value();
      const Rational q2 = qv * qv;
      Rational weight(1), x2 = 1 / (1 - qv), acc(0);
      for (std::size_t n = 0; n < trunc.max_terms; ++n) {
        acc += weight * kernel_at_square<Rational>(x2, q, trunc).value;
        weight *= qv;
        x2 *= q2;
      }
      r = 2 * acc;
      out.terms_used = trunc.max_terms * trunc.max_terms;
    }
    out.surd_value = QScalar(r, 1);
    out.float_value = Real(r) * surd;
    return out;
  }

  if (method == NormalizationMethod::interchanged_sum) {
    auto s = interchanged_series<Real>(q, trunc);
    out.float_value = s.value * surd;
    out.terms_used = s.terms_used;
    out.converged = s.converged;
  } else {
    const Real bound = nu(q).value;
    const auto kernel = [&](const Real& x) { return kernel_eval<Real>(x, q, trunc).value; };
    auto s = jackson_integral_symmetric<Real>(kernel, bound, q, trunc, Parity::even);
    out.float_value = s.value;
    out.terms_used = s.terms_used;
    out.converged = s.converged;
  }
  return out;
}

QPolynomial moment_closed_form(unsigned n) { return q_double_factorial(n); }

MomentResult moment_by_integration(unsigned k, const QParam& q, const TruncationPolicy& trunc) {
  PrecisionScope scope(working_digits(q));
  MomentResult out;
  if (k % 2 == 1) {
    // odd integrand against an even kernel
    out.exact_value = Rational(0);
    out.value = Real(0);
    out.residual = Real(0);
    return out;
  }

  if (trunc.is_exact()) {
    const QPolynomial kernel = kernel_polynomial(q, trunc.max_terms);
    const QScalar numerator = integrate_over_bound(kernel * QPolynomial::monomial(k), q);
    const QScalar normalizer = integrate_over_bound(kernel, q);
    const QScalar ratio = numerator / normalizer;
    out.exact_value = ratio.rational_part();
    out.value = Real(ratio.rational_part());
    out.terms_used = trunc.max_terms;
    out.residual = Real(0);
    return out;
  }

  const Real bound = nu(q).value;
  const auto integrand = [&](const Real& x) {
    return Real(kernel_eval<Real>(x, q, trunc).value * pow(x, static_cast<int>(k)));
  };
  auto integral = jackson_integral_symmetric<Real>(integrand, bound, q, trunc, Parity::even);
  if (!integral.converged) {
    throw TruncationError("moment node sum did not reach tolerance within " +
                          std::to_string(trunc.max_terms) + " terms");
  }
  const NormalizationResult c = c_of_q(q, trunc);
  if (!c.converged) throw TruncationError("normalization series did not converge");
  out.value = integral.value / c.float_value;
  out.residual = integral.residual / c.float_value;
  out.terms_used = integral.terms_used;
  return out;
}

}  // namespace qfj
