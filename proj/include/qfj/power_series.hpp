#pragma once

#include "qfj/errors.hpp"
#include "qfj/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace qfj {

/// Truncated univariate power series sum_{i <= order} a_i g^i.
template <class S>
class PowerSeries {
public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, S(0)) {}
  explicit PowerSeries(std::vector<S> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw ValidationError("power series needs at least one coefficient");
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<S>& coefficients() const noexcept { return coeffs_; }
  const S& operator[](std::size_t i) const { return coeffs_.at(i); }
  S& operator[](std::size_t i) { return coeffs_.at(i); }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.coeffs_[i] == S(0)) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// f(g) -> f(s g).
  PowerSeries scaled_argument(const S& s) const {
    PowerSeries r = *this;
    S p(1);
    for (auto& c : r.coeffs_) {
      c *= p;
      p *= s;
    }
    return r;
  }

  template <class T = S>
  T eval(const T& g) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + T(*it);
    return acc;
  }

private:
  std::vector<S> coeffs_;
};

/// Truncated bivariate series sum a_{c,d} x^c y^d over c <= max_x, d <= max_y,
/// c + d <= max_total.
template <class S>
class PowerSeries2 {
public:
  PowerSeries2(std::size_t max_x, std::size_t max_y, std::size_t max_total)
      : max_x_(max_x), max_y_(max_y), max_total_(std::min(max_total, max_x + max_y)),
        coeffs_((max_x + 1) * (max_y + 1), S(0)) {}
  /// Total-degree truncation only.
  explicit PowerSeries2(std::size_t total_degree)
      : PowerSeries2(total_degree, total_degree, total_degree) {}

  std::size_t max_x() const noexcept { return max_x_; }
  std::size_t max_y() const noexcept { return max_y_; }
  std::size_t max_total() const noexcept { return max_total_; }

  bool in_range(std::size_t c, std::size_t d) const noexcept {
    return c <= max_x_ && d <= max_y_ && c + d <= max_total_;
  }
  S coefficient(std::size_t c, std::size_t d) const {
    return in_range(c, d) ? coeffs_[c * (max_y_ + 1) + d] : S(0);
  }
  void set(std::size_t c, std::size_t d, S value) {
    if (!in_range(c, d)) throw ValidationError("coefficient outside truncation bounds");
    coeffs_[c * (max_y_ + 1) + d] = std::move(value);
  }
  void add(std::size_t c, std::size_t d, const S& value) {
    if (!in_range(c, d)) return;
    coeffs_[c * (max_y_ + 1) + d] += value;
  }

  friend PowerSeries2 operator+(const PowerSeries2& a, const PowerSeries2& b) {
    PowerSeries2 r = common_bounds(a, b);
    r.for_each_index([&](std::size_t c, std::size_t d) { r.set(c, d, a.coefficient(c, d) + b.coefficient(c, d)); });
    return r;
  }
  friend PowerSeries2 operator-(const PowerSeries2& a, const PowerSeries2& b) {
    PowerSeries2 r = common_bounds(a, b);
    r.for_each_index([&](std::size_t c, std::size_t d) { r.set(c, d, a.coefficient(c, d) - b.coefficient(c, d)); });
    return r;
  }
  friend PowerSeries2 operator*(const PowerSeries2& a, const PowerSeries2& b) {
    PowerSeries2 r = common_bounds(a, b);
    a.for_each_index([&](std::size_t i, std::size_t j) {
      const S& ai = a.coefficient(i, j);
      if (ai == S(0)) return;
      b.for_each_index([&](std::size_t k, std::size_t l) {
        if (r.in_range(i + k, j + l)) r.add(i + k, j + l, ai * b.coefficient(k, l));
      });
    });
    return r;
  }
  friend bool operator==(const PowerSeries2&, const PowerSeries2&) = default;

  /// a / b for b with a nonzero constant term, by forward substitution.
  friend PowerSeries2 divide(const PowerSeries2& a, const PowerSeries2& b) {
    const S b00 = b.coefficient(0, 0);
    if (b00 == S(0)) throw DomainError("series division by a series with zero constant term");
    PowerSeries2 r = common_bounds(a, b);
    for (std::size_t total = 0; total <= r.max_total_; ++total) {
      for (std::size_t c = 0; c <= total; ++c) {
        const std::size_t d = total - c;
        if (!r.in_range(c, d)) continue;
        S acc = a.coefficient(c, d);
        for (std::size_t i = 0; i <= c; ++i) {
          for (std::size_t j = 0; j <= d; ++j) {
            if (i == 0 && j == 0) continue;
            const S bij = b.coefficient(i, j);
            if (bij == S(0)) continue;
            acc -= bij * r.coefficient(c - i, d - j);
          }
        }
        r.set(c, d, acc / b00);
      }
    }
    return r;
  }

  template <class F>
  void for_each_index(F&& f) const {
    for (std::size_t c = 0; c <= max_x_; ++c) {
      for (std::size_t d = 0; d <= max_y_ && c + d <= max_total_; ++d) f(c, d);
    }
  }

private:
  static PowerSeries2 common_bounds(const PowerSeries2& a, const PowerSeries2& b) {
    return PowerSeries2(std::min(a.max_x_, b.max_x_), std::min(a.max_y_, b.max_y_),
                        std::min(a.max_total_, b.max_total_));
  }

  std::size_t max_x_;
  std::size_t max_y_;
  std::size_t max_total_;
  std::vector<S> coeffs_;
};

}  // namespace qfj
