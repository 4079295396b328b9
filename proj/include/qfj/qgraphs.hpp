#pragma once

#include "qfj/fseries.hpp"
#include "qfj/pairings.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qfj {

/// Canonical encoding of one decorated cubic graph.
///
/// c two-valent vertices (2 flags each), dprime three-valent vertices (3 flags
/// each), k decorations placed by the k-subset sigma of {1,...,dprime+k}, and
/// the internal edges given as an ordered pairing of the 2c + 3 dprime flags.
/// Flags are numbered vertex by vertex: the two-valent vertices first, then the
/// three-valent ones.
struct GraphEncoding {
  unsigned c = 0;
  unsigned dprime = 0;
  unsigned k = 0;
  std::vector<unsigned> sigma;
  std::vector<Pair> flag_pairing;

  unsigned flag_count() const noexcept { return 2 * c + 3 * dprime; }
  std::string to_string() const;
  friend bool operator==(const GraphEncoding&, const GraphEncoding&) = default;
};

/// Throws ValidationError unless the encoding satisfies the graph axioms.
void validate(const GraphEncoding& gamma);

enum class FlagOrder {
  /// two-valent vertices 1..c, then three-valent vertices 1..dprime
  vertex_order,
  /// the same vertices listed in reverse; flags within a vertex keep their order
  reversed_vertex_order,
};

inline constexpr std::size_t kDefaultGraphListLimit = std::size_t{1} << 21;

/// Visits every encoding with the given vertex and decoration counts: all
/// C(dprime+k, k) placements times all (2c+3dprime-1)!! flag pairings. The
/// visited encoding is reused between calls.
void for_each_graph(unsigned c, unsigned dprime, unsigned k,
                    const std::function<void(const GraphEncoding&)>& visit,
                    unsigned pairing_limit = kDefaultPairingLimit);

/// Materialized list of the same encodings; throws ResourceError above
/// max_encodings.
std::vector<GraphEncoding> enumerate_graphs(unsigned c, unsigned dprime, unsigned k,
                                            std::size_t max_encodings = kDefaultGraphListLimit,
                                            unsigned pairing_limit = kDefaultPairingLimit);

/// (-1)^k q^{2c + 2 C(dprime+k, 2)} w(p), with p the flag pairing read in the
/// given flag order.
QPolynomial omega_q(const GraphEncoding& gamma, FlagOrder order = FlagOrder::vertex_order);

/// [2]_q^c ([3]_q!)^dprime [dprime+k]_{q^2}! [c-k]_{q^2}!.
QPolynomial a_q(const GraphEncoding& gamma);

/// Sum of omega_q / a_q over one (c, dprime, k) block.
struct GraphBlock {
  unsigned c = 0;
  unsigned dprime = 0;
  unsigned k = 0;
  Integer encodings{0};
  /// sum of omega_q over the block, a polynomial in q
  QPolynomial omega_sum;
  QPolynomial amplitude;
  Rational value{0};
};

GraphBlock graph_block(unsigned c, unsigned dprime, unsigned k, const QParam& q,
                       FlagOrder order = FlagOrder::vertex_order,
                       unsigned pairing_limit = kDefaultPairingLimit);

struct GraphSum {
  Rational value{0};
  std::vector<GraphBlock> blocks;
};

/// Coefficient of g^m from the graph sum, over all blocks with dprime = m,
/// c <= max_c and k <= c.
GraphSum graph_sum_coefficient(unsigned m, const QParam& q, unsigned max_c,
                               unsigned pairing_limit = kDefaultPairingLimit);

}  // namespace qfj
