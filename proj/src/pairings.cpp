#include "qfj/pairings.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qfj {

OrderedPairing::OrderedPairing(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  const std::size_t n = pairs_.size();
  if (n == 0) throw ValidationError("an ordered pairing needs at least one pair");
  if (2 * n > 64) throw ValidationError("pairings on more than 64 elements are not supported");
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = pairs_[i];
    if (a < 1 || b < 1 || a > static_cast<int>(2 * n) || b > static_cast<int>(2 * n)) {
      throw ValidationError("pair entries must lie in {1,...,2n}");
    }
    if (a >= b) throw ValidationError("each pair must satisfy a_i < b_i");
    if (i > 0 && pairs_[i - 1].first >= a) throw ValidationError("left endpoints must increase");
    const std::uint64_t bits = (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1));
    if (seen & bits) throw ValidationError("element used twice");
    seen |= bits;
  }
}

OrderedPairing OrderedPairing::canonicalize(std::vector<Pair> pairs) {
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return OrderedPairing(std::move(pairs));
}

std::string OrderedPairing::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out << ",";
    out << "(" << pairs_[i].first << "," << pairs_[i].second << ")";
  }
  out << ")";
  return out.str();
}

namespace {

void check_limit(unsigned n, unsigned limit) {
  if (n > limit) {
    throw ResourceError("pairing enumeration on " + std::to_string(2 * n) +
                        " elements exceeds the limit of " + std::to_string(2 * limit));
  }
}

void extend(std::uint64_t used, int size, std::vector<Pair>& current,
            const std::function<void(std::span<const Pair>)>& visit) {
  if (static_cast<int>(current.size()) * 2 == size) {
    visit(current);
    return;
  }
  const int a = std::countr_one(used) + 1;  // smallest unpaired element
  used |= std::uint64_t{1} << (a - 1);
  for (int b = a + 1; b <= size; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << (b - 1);
    if (used & bit) continue;
    current.emplace_back(a, b);
    extend(used | bit, size, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_pairing(unsigned n, const std::function<void(std::span<const Pair>)>& visit,
                      unsigned limit) {
  check_limit(n, limit);
  if (2 * n > 64) throw ResourceError("pairings on more than 64 elements are not supported");
  std::vector<Pair> current;
  current.reserve(n);
  extend(0, static_cast<int>(2 * n), current, visit);
}

std::vector<OrderedPairing> enumerate_pairings(unsigned n, unsigned limit) {
  if (n == 0) throw DomainError("enumerate_pairings needs n >= 1");
  check_limit(n, limit);
  std::vector<OrderedPairing> out;
  out.reserve(double_factorial_odd(n).convert_to<std::size_t>());
  for_each_pairing(
      n,
      [&](std::span<const Pair> p) {
        out.push_back(OrderedPairing(std::vector<Pair>(p.begin(), p.end()), OrderedPairing::Trusted{}));
      },
      limit);
  return out;
}

unsigned weight_exponent(std::span<const Pair> pairs) {
  std::uint64_t right_ends = 0;  // B_i(p)
  unsigned w = 0;
  for (const auto& [a, b] : pairs) {
    // bits for a < j < b, element j stored at bit j-1
    const std::uint64_t below_b = (std::uint64_t{1} << (b - 1)) - 1;
    const std::uint64_t through_a = (std::uint64_t{1} << a) - 1;
    const std::uint64_t gap = below_b & ~through_a;
    w += static_cast<unsigned>(std::popcount(gap & ~right_ends));
    right_ends |= std::uint64_t{1} << (b - 1);
  }
  return w;
}

unsigned weight_exponent(const OrderedPairing& p) { return weight_exponent(std::span<const Pair>(p.pairs())); }

QPolynomial weight(const OrderedPairing& p) { return QPolynomial::monomial(weight_exponent(p)); }

std::map<unsigned, Integer> weight_histogram(unsigned n, unsigned limit) {
  std::vector<unsigned long long> counts(n * (n > 0 ? n - 1 : 0) + 1, 0);
  for_each_pairing(
      n, [&](std::span<const Pair> p) { ++counts.at(weight_exponent(p)); }, limit);
  std::map<unsigned, Integer> out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w]) out.emplace(static_cast<unsigned>(w), Integer(counts[w]));
  }
  return out;
}

QPolynomial weighted_pairing_sum(unsigned n, unsigned limit) {
  if (n == 0) throw DomainError("weighted_pairing_sum needs n >= 1");
  QPolynomial sum;
  for (const auto& [w, count] : weight_histogram(n, limit)) {
    sum += QPolynomial::monomial(w, Rational(count));
  }
  return sum;
}

}  // namespace qfj
