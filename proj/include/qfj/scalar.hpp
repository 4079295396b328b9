#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

namespace qfj {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
/// Variable-precision binary float; new values take the thread's current
/// default precision (see PrecisionScope).
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

/// Sets the default precision (decimal digits) for newly created Real values
/// and restores the previous setting on exit.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned saved_;
};

template <class S>
S scalar_cast(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>) {
    return r;
  } else if constexpr (std::is_same_v<S, Real>) {
    return Real(r);
  } else {
    return r.template convert_to<S>();
  }
}

template <class S>
double to_double(const S& v) {
  if constexpr (std::is_floating_point_v<S>) {
    return static_cast<double>(v);
  } else {
    return v.template convert_to<double>();
  }
}

template <class S>
S abs_value(const S& v) {
  return v < S(0) ? S(-v) : v;
}

template <class S>
bool is_finite_value(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return true;
  } else {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(v);
  }
}

/// Integer power by repeated squaring; negative exponents invert.
template <class S>
S ipow(S base, long long e) {
  if (e < 0) {
    base = S(1) / base;
    e = -e;
  }
  S result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// Parses "p/q", an integer, or a plain decimal ("0.999", "1e-30") into an
/// exact rational. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// True when the text is written as a ratio or integer rather than a decimal.
bool is_ratio_literal(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string format_rational(const Rational& r);

/// Decimal rendering with the requested number of significant digits.
std::string format_decimal(double v, int significant = 17);
std::string format_decimal(const Real& v, int significant = 17);

}  // namespace qfj
