#pragma once

// Reference computations for tests, written without the library's algorithms.

#include "qfj/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using qfj::Integer;
using qfj::Rational;
using qfj::Real;

/// (1 - q^n) / (1 - q) for scalar q.
template <class S>
S bracket(unsigned n, const S& q) {
  return (S(1) - qfj::ipow(q, n)) / (S(1) - q);
}

template <class S>
S double_factorial(unsigned n, const S& q) {
  S acc(1);
  for (unsigned i = 1; i <= n; ++i) acc *= bracket(2 * i - 1, q);
  return acc;
}

template <class S>
S factorial(unsigned n, const S& q) {
  S acc(1);
  for (unsigned i = 1; i <= n; ++i) acc *= bracket(i, q);
  return acc;
}

/// Binomial coefficient by Pascal's triangle.
inline Integer choose(unsigned n, unsigned k) {
  std::vector<Integer> row(n + 1, Integer(0));
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return k <= n ? row[k] : Integer(0);
}

using Pairing = std::vector<std::pair<int, int>>;

/// All perfect matchings of {1..2n}, found by brute force over permutations.
inline std::set<Pairing> all_pairings(unsigned n) {
  std::vector<int> perm(2 * n);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<Pairing> out;
  do {
    Pairing p;
    for (unsigned i = 0; i < n; ++i) {
      p.emplace_back(std::min(perm[2 * i], perm[2 * i + 1]), std::max(perm[2 * i], perm[2 * i + 1]));
    }
    std::sort(p.begin(), p.end());
    out.insert(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Weight exponent of a sorted pairing from the set definition.
inline unsigned weight(const Pairing& p) {
  std::set<int> right_ends;
  unsigned w = 0;
  for (const auto& [a, b] : p) {
    for (int j = a + 1; j < b; ++j) w += right_ends.count(j) ? 0 : 1;
    right_ends.insert(b);
  }
  return w;
}

/// Kernel at the node x = q^j nu, as the product prod_{i >= 0} (1 - q^{2j+2+2i}).
inline Real kernel_at_node(unsigned j, const Real& q) {
  Real acc(1);
  Real p = qfj::ipow(q, 2LL * j + 2);
  const Real q2 = q * q;
  const Real eps = qfj::ipow(Real(10), -static_cast<long long>(Real::default_precision()) - 5);
  while (p > eps) {
    acc *= Real(1) - p;
    p *= q2;
  }
  return acc;
}

/// (1/c) * sum over nodes of kernel * x^{2n}, with c the same node sum for n = 0.
inline Real moment_from_product(unsigned n, const Rational& q_exact, std::size_t nodes) {
  const Real q(q_exact);
  const Real nu2 = Real(1) / (Real(1) - q);
  Real num(0), den(0), w(1);
  for (std::size_t j = 0; j < nodes; ++j) {
    const Real k = kernel_at_node(static_cast<unsigned>(j), q) * w;
    const Real x2 = nu2 * w * w;
    num += k * qfj::ipow(x2, n);
    den += k;
    w *= q;
  }
  return num / den;
}

/// Coefficient of g^{2d} in I(g), by expanding E_{q^2}^{A + g B} with
/// A = -q^2 x^2/[2]_q and B = x^3/[3]_q! binomially and integrating each
/// monomial against the flat Jackson measure on [-nu, nu]; no kernel, no
/// lambda, no moment formula. The sum over n runs until the terms are below
/// 10^{-digits}.
inline Real series_coefficient_by_expansion(unsigned d, const Rational& q_exact) {
  const Real q(q_exact);
  const Real q2 = q * q;
  const Real nu2 = Real(1) / (Real(1) - q);
  const Real A = -q2 / (Real(1) + q);
  const Real B = Real(1) / ((Real(1) + q) * (Real(1) + q + q2));
  // flat integral of x^{2j} over [-nu, nu], divided by the common factor 2 nu (1 - q)
  const auto flat = [&](unsigned j) { return qfj::ipow(nu2, j) / (Real(1) - qfj::ipow(q, 2LL * j + 1)); };
  const Real eps = qfj::ipow(Real(10), -static_cast<long long>(Real::default_precision()));
  const unsigned m = 2 * d;
  Real num(0), den(0), fact(1);
  for (unsigned n = 0;; ++n) {
    if (n > 0) fact *= bracket(n, q2);
    const Real coef = qfj::ipow(q, static_cast<long long>(n) * (n > 0 ? n - 1 : 0)) / fact;
    const Real c_term = coef * qfj::ipow(A, n) * flat(n);
    den += c_term;
    Real term(0);
    if (n >= m) {
      const Real binom(Rational(choose(n, m)));
      term = coef * binom * qfj::ipow(A, n - m) * qfj::ipow(B, m) * flat(n - m + 3 * d);
      num += term;
    }
    if (n > 4 * m + 20 && qfj::abs_value(c_term) < eps && qfj::abs_value(term) < eps) break;
  }
  return num / den;
}

/// Uniform random rational p/q in (0, 1) with small denominator.
inline Rational random_q(std::mt19937& rng, int max_den = 12) {
  std::uniform_int_distribution<int> den(2, max_den);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(1, d - 1);
  return Rational(num(rng), d);
}

}  // namespace oracle
