#include <doctest.h>

#include "oracles.hpp"
#include "qfj/pairings.hpp"

#include <set>

using namespace qfj;

TEST_CASE("ordered pairing validation") {
  CHECK_NOTHROW(OrderedPairing({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(OrderedPairing({}), ValidationError);
  CHECK_THROWS_AS(OrderedPairing({{2, 1}, {3, 4}}), ValidationError);
  CHECK_THROWS_AS(OrderedPairing({{3, 4}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(OrderedPairing({{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(OrderedPairing({{1, 5}, {2, 3}}), ValidationError);
  CHECK(OrderedPairing::canonicalize({{4, 3}, {2, 1}}) == OrderedPairing({{1, 2}, {3, 4}}));
  CHECK(OrderedPairing({{1, 3}, {2, 4}}).to_string() == "((1,3),(2,4))");
}

TEST_CASE("weights of the pairings of four elements") {
  const auto all = enumerate_pairings(2);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == OrderedPairing({{1, 2}, {3, 4}}));
  CHECK(weight(all[0]) == QPolynomial::monomial(0));
  CHECK(weight(all[1]) == QPolynomial::monomial(1));
  CHECK(weight(all[2]) == QPolynomial::monomial(2));
  CHECK(weighted_pairing_sum(2) == q_bracket(3));
  CHECK(weighted_pairing_sum(2).to_string() == "1 + q + q^2");
}

TEST_CASE("single pair") {
  CHECK(weighted_pairing_sum(1) == QPolynomial::constant(1));
  CHECK(weighted_pairing_sum(1).to_string() == "1");
}

TEST_CASE("enumeration matches brute force, each pairing once") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto mine = enumerate_pairings(n);
    const auto brute = oracle::all_pairings(n);
    CHECK(mine.size() == brute.size());
    std::set<oracle::Pairing> seen;
    for (const auto& p : mine) {
      seen.insert(p.pairs());
      CHECK(brute.count(p.pairs()) == 1);
      CHECK(weight_exponent(p) == oracle::weight(p.pairs()));
    }
    CHECK(seen.size() == mine.size());
    CHECK(std::is_sorted(mine.begin(), mine.end()));
  }
}

TEST_CASE("weighted sum identity for n <= 6") {
  for (unsigned n = 1; n <= 6; ++n) {
    const QPolynomial sum = weighted_pairing_sum(n);
    CHECK(sum == q_double_factorial(n));
    CHECK(sum.eval(Rational(1)) == Rational(double_factorial_odd(n)));
    CHECK(Integer(enumerate_pairings(n).size()) == double_factorial_odd(n));
  }
}

TEST_CASE("weight exponents lie in [0, n(n-1)] with the top attained") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto h = weight_histogram(n);
    CHECK(h.begin()->first == 0);
    CHECK(h.rbegin()->first == n * (n - 1));
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_pairings(0), DomainError);
  CHECK_THROWS_AS(weighted_pairing_sum(0), DomainError);
  CHECK_THROWS_AS(enumerate_pairings(9), ResourceError);
  CHECK_THROWS_AS(weighted_pairing_sum(9), ResourceError);
  CHECK_NOTHROW(weight_histogram(2, 2));
  CHECK_THROWS_AS(weight_histogram(3, 2), ResourceError);
}
