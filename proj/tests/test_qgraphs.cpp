#include <doctest.h>

#include "oracles.hpp"
#include "qfj/qgraphs.hpp"

#include <set>

using namespace qfj;

namespace {
const QParam half = QParam::parse("1/2");

GraphEncoding make(unsigned c, unsigned dprime, unsigned k, std::vector<unsigned> sigma, std::vector<Pair> pairing) {
  GraphEncoding g;
  g.c = c;
  g.dprime = dprime;
  g.k = k;
  g.sigma = std::move(sigma);
  g.flag_pairing = std::move(pairing);
  return g;
}
}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_graphs(0, 2, 0).size() == 15);
  CHECK(enumerate_graphs(1, 0, 0).size() == 1);
  CHECK(enumerate_graphs(2, 0, 1).size() == 3);
  CHECK(enumerate_graphs(0, 0, 0).size() == 1);
  for (unsigned c = 0; c <= 3; ++c) {
    for (unsigned k = 0; k <= c; ++k) {
      const auto all = enumerate_graphs(c, 2, k);
      CHECK(Integer(all.size()) == oracle::choose(2 + k, k) * double_factorial_odd(c + 3));
      std::set<std::string> distinct;
      for (const auto& g : all) {
        CHECK_NOTHROW(validate(g));
        distinct.insert(g.to_string());
      }
      CHECK(distinct.size() == all.size());
    }
  }
}

TEST_CASE("enumeration preconditions and limits") {
  CHECK_THROWS_AS(enumerate_graphs(1, 2, 2), DomainError);
  CHECK_THROWS_AS(enumerate_graphs(0, 1, 0), DomainError);
  CHECK_THROWS_AS(enumerate_graphs(4, 4, 0, kDefaultGraphListLimit), ResourceError);
  CHECK_THROWS_AS(enumerate_graphs(2, 2, 1, 10), ResourceError);
}

TEST_CASE("encoding validation") {
  CHECK_NOTHROW(validate(make(1, 0, 1, {1}, {{1, 2}})));
  CHECK_THROWS_AS(validate(make(1, 0, 2, {1, 2}, {{1, 2}})), ValidationError);
  CHECK_THROWS_AS(validate(make(1, 0, 1, {}, {{1, 2}})), ValidationError);
  CHECK_THROWS_AS(validate(make(1, 0, 1, {2}, {{1, 2}})), ValidationError);
  CHECK_THROWS_AS(validate(make(2, 0, 0, {}, {{1, 2}})), ValidationError);
  CHECK_THROWS_AS(validate(make(2, 0, 0, {}, {{1, 2}, {2, 4}})), ValidationError);
}

TEST_CASE("omega_q examples") {
  CHECK(omega_q(make(1, 0, 0, {}, {{1, 2}})) == QPolynomial::monomial(2));
  CHECK(omega_q(make(1, 0, 1, {1}, {{1, 2}})) == QPolynomial::monomial(2, Rational(-1)));
  CHECK(omega_q(make(0, 2, 0, {}, {{1, 2}, {3, 4}, {5, 6}})) == QPolynomial::monomial(2));
  // a crossing pairing adds its weight
  CHECK(omega_q(make(0, 2, 0, {}, {{1, 4}, {2, 3}, {5, 6}})) == QPolynomial::monomial(4));
  CHECK(omega_q(GraphEncoding{}) == QPolynomial::constant(1));
}

TEST_CASE("a_q examples") {
  CHECK(a_q(make(1, 0, 0, {}, {{1, 2}})) == q_bracket(2));
  CHECK(a_q(make(0, 2, 0, {}, {{1, 2}, {3, 4}, {5, 6}})) == q_factorial(3).pow(2) * q_squared_factorial(2));
  CHECK(a_q(GraphEncoding{}) == QPolynomial::constant(1));
}

TEST_CASE("reversed flag order relabels individual weights") {
  // c = 1, dprime = 2: flags 1-2 on the two-valent vertex, 3-5 and 6-8 on the others
  const GraphEncoding g = make(1, 2, 0, {}, {{1, 2}, {3, 6}, {4, 7}, {5, 8}});
  const QPolynomial forward = omega_q(g, FlagOrder::vertex_order);
  const QPolynomial backward = omega_q(g, FlagOrder::reversed_vertex_order);
  // reversed order puts flags 6-8 first, then 3-5, then 1-2: ((1,4),(2,5),(3,6),(7,8))
  const OrderedPairing relabeled({{1, 4}, {2, 5}, {3, 6}, {7, 8}});
  CHECK(backward == QPolynomial::monomial(2 + 2 + weight_exponent(relabeled)));
  CHECK(forward == QPolynomial::monomial(2 + 2 + weight_exponent(OrderedPairing(g.flag_pairing))));
}

TEST_CASE("block sums by enumeration agree with graph_block") {
  for (unsigned c = 0; c <= 2; ++c) {
    for (unsigned k = 0; k <= c; ++k) {
      QPolynomial omega_sum;
      std::size_t count = 0;
      for_each_graph(c, 2, k, [&](const GraphEncoding& g) {
        omega_sum += omega_q(g);
        ++count;
      });
      const GraphBlock b = graph_block(c, 2, k, half);
      CHECK(b.omega_sum == omega_sum);
      CHECK(b.encodings == count);
      CHECK(b.amplitude == a_q(enumerate_graphs(c, 2, k).front()));
    }
  }
}

TEST_CASE("block sums from the brute-force pairing oracle") {
  // omega sum = (-1)^k C(dprime+k,k) q^{2c + (dprime+k)(dprime+k-1)} sum_p q^{w(p)}
  for (unsigned c = 0; c <= 2; ++c) {
    for (unsigned k = 0; k <= c; ++k) {
      const unsigned n = c + 3;
      QPolynomial pairings;
      for (const auto& p : oracle::all_pairings(n)) pairings += QPolynomial::monomial(oracle::weight(p));
      const unsigned e = 2 * c + (2 + k) * (1 + k);
      Rational coef(oracle::choose(2 + k, k));
      if (k % 2 == 1) coef = -coef;
      CHECK(graph_block(c, 2, k, half).omega_sum == QPolynomial::monomial(e, coef) * pairings);
    }
  }
}

TEST_CASE("block equivalence with single series terms") {
  for (const char* text : {"1/4", "1/2"}) {
    const QParam q = QParam::parse(text);
    const QTables<Rational> t(q, 16, 20);
    for (unsigned dprime = 0; dprime <= 4; dprime += 2) {
      for (unsigned c = 0; c <= 4; ++c) {
        if ((2 * c + 3 * dprime) / 2 > kDefaultPairingLimit) continue;
        for (unsigned k = 0; k <= c; ++k) {
          const GraphBlock b = graph_block(c, dprime, k, q);
          const RationalFunction f = fj_term_rational_function(c, dprime / 2, k);
          CHECK(b.omega_sum * f.denominator == f.numerator * b.amplitude);
          CHECK(b.value == fj_term<Rational>(c, dprime / 2, k, t));
        }
      }
    }
  }
}

TEST_CASE("block equivalence beyond the default pairing limit") {
  // c = 3, dprime = 4: 18 flags, 34,459,425 pairings
  const QParam q = QParam::parse("1/2");
  const QTables<Rational> t(q, 16, 20);
  const GraphBlock b = graph_block(3, 4, 1, q, FlagOrder::vertex_order, 9);
  CHECK(b.value == fj_term<Rational>(3, 2, 1, t));
  CHECK_THROWS_AS(graph_block(3, 4, 1, q), ResourceError);
}

TEST_CASE("graph sum examples") {
  const GraphSum m0 = graph_sum_coefficient(0, half, 1);
  CHECK(m0.value == 1);
  REQUIRE(m0.blocks.size() == 3);
  CHECK(m0.blocks[1].value == -m0.blocks[2].value);
  const Rational q = half.value();
  CHECK(m0.blocks[1].value == q * q / (1 + q));

  const GraphSum m2 = graph_sum_coefficient(2, half, 0);
  const Rational expected = q * q * oracle::double_factorial(3, q) /
                            (ipow(oracle::factorial(3, q), 2) * oracle::factorial(2, Rational(q * q)));
  CHECK(m2.blocks.front().value == expected);
  CHECK(graph_sum_coefficient(3, half, 2).value == 0);
}

TEST_CASE("graph sum equals the series coefficient") {
  CHECK(graph_sum_coefficient(0, half, 4).value == fj_coefficient<Rational>(0, half, 4).value);
  CHECK(graph_sum_coefficient(2, half, 4).value == fj_coefficient<Rational>(2, half, 4).value);
  CHECK(graph_sum_coefficient(4, half, 2).value == fj_coefficient<Rational>(4, half, 2).value);
  const QParam q = QParam::parse("1/4");
  CHECK(graph_sum_coefficient(2, q, 3).value == fj_coefficient<Rational>(2, q, 3).value);
}

TEST_CASE("graph sum at max_c = 6 with a raised pairing limit") {
  CHECK(graph_sum_coefficient(2, half, 6, 9).value == fj_coefficient<Rational>(2, half, 6).value);
}

TEST_CASE("flag order leaves block sums unchanged") {
  for (unsigned k = 0; k <= 2; ++k) {
    const GraphBlock a = graph_block(2, 2, k, half, FlagOrder::vertex_order);
    const GraphBlock b = graph_block(2, 2, k, half, FlagOrder::reversed_vertex_order);
    CHECK(a.omega_sum == b.omega_sum);
  }
  const GraphBlock a = graph_block(1, 4, 0, half, FlagOrder::vertex_order);
  const GraphBlock b = graph_block(1, 4, 0, half, FlagOrder::reversed_vertex_order);
  CHECK(a.omega_sum == b.omega_sum);
}

TEST_CASE("empty graph") {
  const GraphEncoding empty;
  CHECK(omega_q(empty).eval(half) / a_q(empty).eval(half) == 1);
  CHECK(graph_block(0, 0, 0, half).value == 1);
}
