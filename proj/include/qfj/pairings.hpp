#pragma once

#include "qfj/qcore.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qfj {

using Pair = std::pair<int, int>;

/// Pairs (a_1,b_1),...,(a_n,b_n) partitioning {1,...,2n} with a_1 < ... < a_n
/// and a_i < b_i.
class OrderedPairing {
public:
  /// Validates the three defining conditions; throws ValidationError.
  explicit OrderedPairing(std::vector<Pair> pairs);

  /// Sorts each pair and orders pairs by left endpoint before validating.
  static OrderedPairing canonicalize(std::vector<Pair> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::string to_string() const;

  friend bool operator==(const OrderedPairing&, const OrderedPairing&) = default;
  friend auto operator<=>(const OrderedPairing&, const OrderedPairing&) = default;

private:
  struct Trusted {};
  OrderedPairing(std::vector<Pair> pairs, Trusted) : pairs_(std::move(pairs)) {}
  friend std::vector<OrderedPairing> enumerate_pairings(unsigned n, unsigned limit);

  std::vector<Pair> pairs_;
};

inline constexpr unsigned kDefaultPairingLimit = 8;

/// Calls visit(span of pairs) for every ordered pairing of {1..2n}, in
/// lexicographic order of the pair sequence. The smallest unpaired element is
/// always paired next, so each ordered pairing appears exactly once. The span
/// is reused between calls.
void for_each_pairing(unsigned n, const std::function<void(std::span<const Pair>)>& visit,
                      unsigned limit = kDefaultPairingLimit);

/// All (2n-1)!! ordered pairings of {1..2n}. Throws ResourceError when n
/// exceeds the limit.
std::vector<OrderedPairing> enumerate_pairings(unsigned n, unsigned limit = kDefaultPairingLimit);

/// W = sum_i |{j : a_i < j < b_i} \ {b_1,...,b_{i-1}}| for a valid pairing.
unsigned weight_exponent(std::span<const Pair> pairs);
unsigned weight_exponent(const OrderedPairing& p);

/// The weight q^W as a monomial.
QPolynomial weight(const OrderedPairing& p);

/// Number of ordered pairings of {1..2n} at each weight exponent.
std::map<unsigned, Integer> weight_histogram(unsigned n, unsigned limit = kDefaultPairingLimit);

/// sum over P[2n] of the weights, as an exact polynomial in q.
QPolynomial weighted_pairing_sum(unsigned n, unsigned limit = kDefaultPairingLimit);

}  // namespace qfj
