#include "qfj/qgraphs.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qfj {

std::string GraphEncoding::to_string() const {
  std::ostringstream out;
  out << "{c=" << c << ",dprime=" << dprime << ",k=" << k << ",sigma=(";
  for (std::size_t i = 0; i < sigma.size(); ++i) out << (i ? "," : "") << sigma[i];
  out << "),pairing=(";
  for (std::size_t i = 0; i < flag_pairing.size(); ++i) {
    out << (i ? "," : "") << "(" << flag_pairing[i].first << "," << flag_pairing[i].second << ")";
  }
  out << ")}";
  return out.str();
}

void validate(const GraphEncoding& gamma) {
  if (gamma.k > gamma.c) throw ValidationError("graph encoding needs k <= c");
  if (gamma.dprime % 2 == 1) throw ValidationError("graph encoding needs an even number of three-valent vertices");
  if (gamma.sigma.size() != gamma.k) throw ValidationError("sigma must have exactly k elements");
  for (std::size_t i = 0; i < gamma.sigma.size(); ++i) {
    if (gamma.sigma[i] < 1 || gamma.sigma[i] > gamma.dprime + gamma.k) {
      throw ValidationError("sigma entries must lie in {1,...,dprime+k}");
    }
    if (i > 0 && gamma.sigma[i - 1] >= gamma.sigma[i]) throw ValidationError("sigma must be strictly increasing");
  }
  const unsigned flags = gamma.flag_count();
  if (gamma.flag_pairing.size() * 2 != flags) throw ValidationError("flag pairing must cover every flag");
  if (flags > 0) OrderedPairing check(gamma.flag_pairing);
}

namespace {

void check_block(unsigned c, unsigned dprime, unsigned k) {
  if (k > c) throw DomainError("graph block needs k <= c");
  if (dprime % 2 == 1) throw DomainError("graph block needs even dprime");
}

// Calls visit for every increasing k-subset of {1..n}.
void for_each_subset(unsigned n, unsigned k, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> subset(k);
  for (unsigned i = 0; i < k; ++i) subset[i] = i + 1;
  while (true) {
    visit(subset);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && subset[i] == n - k + static_cast<unsigned>(i) + 1) --i;
    if (i < 0) return;
    ++subset[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Position of each flag after listing the vertices in reverse order.
std::vector<int> reversed_flag_positions(unsigned c, unsigned dprime) {
  std::vector<unsigned> sizes;
  for (unsigned i = 0; i < c; ++i) sizes.push_back(2);
  for (unsigned j = 0; j < dprime; ++j) sizes.push_back(3);
  std::vector<unsigned> start(sizes.size());
  unsigned pos = 0;
  for (std::size_t v = sizes.size(); v-- > 0;) {
    start[v] = pos;
    pos += sizes[v];
  }
  std::vector<int> map(pos + 1, 0);
  unsigned flag = 1;
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    for (unsigned f = 0; f < sizes[v]; ++f) map[flag++] = static_cast<int>(start[v] + f + 1);
  }
  return map;
}

unsigned reordered_weight(std::span<const Pair> pairs, const std::vector<int>& map) {
  std::vector<Pair> relabeled;
  relabeled.reserve(pairs.size());
  for (const auto& [a, b] : pairs) relabeled.emplace_back(map[a], map[b]);
  return weight_exponent(OrderedPairing::canonicalize(std::move(relabeled)));
}

const std::map<unsigned, Integer>& cached_histogram(unsigned n, unsigned limit) {
  static std::mutex mutex;
  static std::map<unsigned, std::map<unsigned, Integer>> cache;
  if (n > limit) {
    throw ResourceError("pairing enumeration on " + std::to_string(2 * n) +
                        " elements exceeds the limit of " + std::to_string(2 * limit));
  }
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, weight_histogram(n, limit)).first;
  return it->second;
}

std::size_t omega_exponent(unsigned c, unsigned dprime, unsigned k) {
  const std::size_t n = dprime + k;
  return 2 * static_cast<std::size_t>(c) + n * (n > 0 ? n - 1 : 0);
}

}  // namespace

void for_each_graph(unsigned c, unsigned dprime, unsigned k,
                    const std::function<void(const GraphEncoding&)>& visit, unsigned pairing_limit) {
  check_block(c, dprime, k);
  GraphEncoding gamma;
  gamma.c = c;
  gamma.dprime = dprime;
  gamma.k = k;
  const unsigned pairs = gamma.flag_count() / 2;
  for_each_subset(dprime + k, k, [&](const std::vector<unsigned>& sigma) {
    gamma.sigma = sigma;
    for_each_pairing(
        pairs,
        [&](std::span<const Pair> p) {
          gamma.flag_pairing.assign(p.begin(), p.end());
          visit(gamma);
        },
        pairing_limit);
  });
}

std::vector<GraphEncoding> enumerate_graphs(unsigned c, unsigned dprime, unsigned k,
                                            std::size_t max_encodings, unsigned pairing_limit) {
  check_block(c, dprime, k);
  const Integer count = binomial(dprime + k, k) * double_factorial_odd((2 * c + 3 * dprime) / 2);
  if (count > max_encodings) {
    throw ResourceError("graph block has " + count.str() + " encodings, above the list limit of " +
                        std::to_string(max_encodings));
  }
  std::vector<GraphEncoding> out;
  out.reserve(count.convert_to<std::size_t>());
  for_each_graph(c, dprime, k, [&](const GraphEncoding& g) { out.push_back(g); }, pairing_limit);
  return out;
}

QPolynomial omega_q(const GraphEncoding& gamma, FlagOrder order) {
  validate(gamma);
  unsigned w = 0;
  if (!gamma.flag_pairing.empty()) {
    w = order == FlagOrder::vertex_order
            ? weight_exponent(std::span<const Pair>(gamma.flag_pairing))
            : reordered_weight(gamma.flag_pairing, reversed_flag_positions(gamma.c, gamma.dprime));
  }
  const Rational sign = gamma.k % 2 == 0 ? Rational(1) : Rational(-1);
  return QPolynomial::monomial(omega_exponent(gamma.c, gamma.dprime, gamma.k) + w, sign);
}

QPolynomial a_q(const GraphEncoding& gamma) {
  validate(gamma);
  return q_bracket(2).pow(gamma.c) * q_factorial(3).pow(gamma.dprime) *
         q_squared_factorial(gamma.dprime + gamma.k) * q_squared_factorial(gamma.c - gamma.k);
}

GraphBlock graph_block(unsigned c, unsigned dprime, unsigned k, const QParam& q, FlagOrder order,
                       unsigned pairing_limit) {
  check_block(c, dprime, k);
  GraphBlock block;
  block.c = c;
  block.dprime = dprime;
  block.k = k;
  const unsigned pairs = (2 * c + 3 * dprime) / 2;

  // Pairing weights do not depend on sigma, so each flag order needs one
  // weight histogram, reused for every placement.
  std::map<unsigned, Integer> histogram;
  if (pairs == 0) {
    histogram.emplace(0u, Integer(1));
  } else if (order == FlagOrder::vertex_order) {
    histogram = cached_histogram(pairs, pairing_limit);
  } else {
    const std::vector<int> map = reversed_flag_positions(c, dprime);
    for_each_pairing(
        pairs, [&](std::span<const Pair> p) { histogram[reordered_weight(p, map)] += 1; }, pairing_limit);
  }

  const std::size_t base = omega_exponent(c, dprime, k);
  const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
  for_each_subset(dprime + k, k, [&](const std::vector<unsigned>&) {
    for (const auto& [w, count] : histogram) {
      block.omega_sum += QPolynomial::monomial(base + w, sign * Rational(count));
      block.encodings += count;
    }
  });

  GraphEncoding shape;
  shape.c = c;
  shape.dprime = dprime;
  shape.k = k;
  for (unsigned i = 1; i <= k; ++i) shape.sigma.push_back(i);
  for (unsigned i = 0; i < pairs; ++i) shape.flag_pairing.emplace_back(2 * i + 1, 2 * i + 2);
  block.amplitude = a_q(shape);
  block.value = block.omega_sum.eval(q) / block.amplitude.eval(q);
  return block;
}

GraphSum graph_sum_coefficient(unsigned m, const QParam& q, unsigned max_c, unsigned pairing_limit) {
  GraphSum sum;
  if (m % 2 == 1) return sum;
  for (unsigned c = 0; c <= max_c; ++c) {
    for (unsigned k = 0; k <= c; ++k) {
      GraphBlock block = graph_block(c, m, k, q, FlagOrder::vertex_order, pairing_limit);
      sum.value += block.value;
      sum.blocks.push_back(std::move(block));
    }
  }
  return sum;
}

}  // namespace qfj
