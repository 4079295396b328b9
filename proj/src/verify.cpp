#include "qfj/verify.hpp"

#include "qfj/fseries.hpp"
#include "qfj/qgraphs.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace qfj {

namespace {

using Checks = std::vector<CheckResult>;

class Recorder {
public:
  Recorder(std::string suite, Checks& out) : suite_(std::move(suite)), out_(out) {}

  void exact(std::string name, bool pass, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), pass, pass ? 0.0 : 1.0, std::move(detail)});
  }
  void within(std::string name, double deviation, double tol, std::string detail = {}) {
    const bool pass = std::isfinite(deviation) && deviation <= tol;
    out_.push_back({suite_, std::move(name), pass, deviation, std::move(detail)});
  }
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out_.push_back({suite_, name, false, 1.0, e.what()});
    }
  }

private:
  std::string suite_;
  Checks& out_;
};

double abs_diff(const Real& a, const Real& b) { return std::fabs(to_double(Real(a - b))); }

void suite_qcalc(const QParam& q, Checks& out) {
  Recorder r("qcalc", out);
  r.guarded("e_q_E_q_inverse_degree_12", [&] {
    const auto e = e_q_series<Rational>(12, q);
    const auto E = E_q_series<Rational>(12, q).scaled_argument(Rational(-1));
    const auto product = e * E;
    bool pass = product[0] == 1;
    for (std::size_t i = 1; i <= 12; ++i) pass = pass && product[i] == 0;
    r.exact("e_q_E_q_inverse_degree_12", pass);
  });
  r.guarded("power_rule", [&] {
    bool pass = true;
    for (unsigned k = 1; k <= 10; ++k) {
      const QPolynomial d = q_derivative(QPolynomial::monomial(k), q);
      pass = pass && d == QPolynomial::monomial(k - 1, q_bracket(k).eval(q));
    }
    r.exact("power_rule", pass);
  });
  r.guarded("product_rule", [&] {
    const QPolynomial f{Rational(1), Rational(-2), Rational(0), Rational(3, 5)};
    const QPolynomial g{Rational(-4), Rational(1, 3), Rational(7)};
    const auto fx = [&](const Rational& x) { return f.eval(x); };
    const auto gx = [&](const Rational& x) { return g.eval(x); };
    const auto fgx = [&](const Rational& x) { return f.eval(x) * g.eval(x); };
    bool pass = true;
    for (const Rational& x : {Rational(1, 3), Rational(2), Rational(-5, 7)}) {
      const Rational lhs = q_derivative<Rational>(fgx, x, q);
      const Rational rhs = q_derivative<Rational>(fx, x, q) * g.eval(x) +
                           f.eval(Rational(q.value() * x)) * q_derivative<Rational>(gx, x, q);
      pass = pass && lhs == rhs;
    }
    r.exact("product_rule", pass);
  });
  r.guarded("fundamental_theorem", [&] {
    const QPolynomial F{Rational(2), Rational(-1), Rational(5, 2), Rational(0), Rational(1, 9)};
    const Rational b(3, 2);
    const Rational lhs = jackson_integral(q_derivative(F, q), b, q);
    r.exact("fundamental_theorem", lhs == F.eval(b) - F.eval(Rational(0)));
  });
  r.guarded("node_sum_matches_closed_form", [&] {
    PrecisionScope scope(working_digits(q));
    const auto f = [](const Real& x) { return Real(x * x); };
    const auto sum = jackson_integral<Real>(f, Real(1), q);
    const Real expected(Rational(1) / q_bracket(3).eval(q));
    r.within("node_sum_matches_closed_form", abs_diff(sum.value, expected), 1e-25);
  });
  r.guarded("riemann_limit_probe", [&] {
    double previous = INFINITY;
    bool monotone = true;
    for (const char* text : {"9/10", "99/100", "999/1000"}) {
      const QParam p = QParam::parse(text);
      const double err = std::fabs(to_double(Rational(jackson_integral(QPolynomial::monomial(2), Rational(1), p) -
                                                      Rational(1, 3))));
      monotone = monotone && err < previous;
      previous = err;
    }
    r.exact("riemann_limit_probe", monotone, "integral of x^2 over [0,1] approaches 1/3");
  });
}

void suite_gauss(const QParam& q, Checks& out) {
  Recorder r("gauss", out);
  r.guarded("interchange_identity", [&] {
    const auto a = c_of_q(q, {}, NormalizationMethod::interchanged_sum);
    const auto b = c_of_q(q, {}, NormalizationMethod::double_sum);
    r.within("interchange_identity", abs_diff(a.float_value, b.float_value), 1e-12);
  });
  r.guarded("moments_closed_form", [&] {
    double worst = 0;
    for (unsigned n = 0; n <= 5; ++n) {
      const auto m = moment_by_integration(2 * n, q);
      worst = std::max(worst, abs_diff(m.value, Real(moment_closed_form(n).eval(q))));
    }
    r.within("moments_closed_form", worst, 1e-8);
  });
  r.guarded("odd_moments_zero", [&] {
    bool pass = true;
    for (unsigned k = 1; k <= 9; k += 2) {
      const auto m = moment_by_integration(k, q);
      pass = pass && m.exact_value && *m.exact_value == 0;
    }
    r.exact("odd_moments_zero", pass);
  });
  r.guarded("moment_recursion", [&] {
    double worst = 0;
    Real previous = moment_by_integration(0, q).value;
    for (unsigned n = 0; n <= 4; ++n) {
      const Real next = moment_by_integration(2 * n + 2, q).value;
      worst = std::max(worst, abs_diff(Real(next / previous), Real(q_bracket(2 * n + 1).eval(q))));
      previous = next;
    }
    r.within("moment_recursion", worst, 1e-8);
  });
  r.guarded("classical_fourth_moment_probe", [&] {
    double previous = INFINITY;
    bool monotone = true;
    for (const char* text : {"9/10", "99/100"}) {
      // node sums near q = 1 need about ln(tol)/ln(q) nodes
      const auto trunc = TruncationPolicy::floating(20000);
      const double err = std::fabs(to_double(moment_by_integration(4, QParam::parse(text), trunc).value) - 3.0);
      monotone = monotone && err < previous;
      previous = err;
    }
    r.exact("classical_fourth_moment_probe", monotone);
  });
  r.guarded("normalization_limit_probe", [&] {
    const double target = std::sqrt(2 * std::numbers::pi);
    double previous = INFINITY;
    bool monotone = true;
    for (const char* text : {"9/10", "99/100", "999/1000"}) {
      const double err = std::fabs(to_double(c_of_q(QParam::parse(text)).float_value) - target);
      monotone = monotone && err < previous;
      previous = err;
    }
    r.exact("normalization_limit_probe", monotone && previous < 1e-3);
  });
}

void suite_pairings(Checks& out) {
  Recorder r("pairings", out);
  r.guarded("weighted_sum_identity", [&] {
    bool pass = true;
    for (unsigned n = 1; n <= 6; ++n) pass = pass && weighted_pairing_sum(n) == q_double_factorial(n);
    r.exact("weighted_sum_identity", pass, "n = 1..6");
  });
  r.guarded("enumeration_count", [&] {
    bool pass = true;
    for (unsigned n = 1; n <= 6; ++n) {
      pass = pass && Integer(enumerate_pairings(n).size()) == double_factorial_odd(n);
    }
    r.exact("enumeration_count", pass);
  });
  r.guarded("classical_count", [&] {
    bool pass = true;
    for (unsigned n = 1; n <= 6; ++n) {
      pass = pass && weighted_pairing_sum(n).eval(Rational(1)) == Rational(double_factorial_odd(n));
    }
    r.exact("classical_count", pass);
  });
  r.guarded("weight_range", [&] {
    bool pass = true;
    for (unsigned n = 1; n <= 5; ++n) {
      unsigned top = 0;
      for (const auto& p : enumerate_pairings(n)) top = std::max(top, weight_exponent(p));
      pass = pass && top == n * (n - 1);
    }
    r.exact("weight_range", pass);
  });
  r.guarded("four_element_weights", [&] {
    std::multiset<unsigned> w;
    for (const auto& p : enumerate_pairings(2)) w.insert(weight_exponent(p));
    r.exact("four_element_weights", w == std::multiset<unsigned>{0, 1, 2});
  });
}

void suite_lambda(const QParam& q, Checks& out) {
  Recorder r("lambda", out);
  r.guarded("closed_form_vs_oracle", [&] {
    const LambdaTable closed = lambda_table(8, 8, q);
    const LambdaTable oracle = lambda_oracle(8, 8, q);
    bool pass = true;
    for (unsigned c = 0; c <= 8; ++c) {
      for (unsigned d = 0; c + d <= 8; ++d) pass = pass && closed.at(c, d) == oracle.at(c, d);
    }
    r.exact("closed_form_vs_oracle", pass, "c + d <= 8");
  });
  r.guarded("first_column_delta", [&] {
    bool pass = true;
    for (unsigned c = 0; c <= 8; ++c) pass = pass && lambda_closed_form<Rational>(c, 0, q) == (c == 0 ? 1 : 0);
    r.exact("first_column_delta", pass);
  });
  r.guarded("defining_identity", [&] {
    PowerSeries2<Rational> lambda(8);
    lambda.for_each_index([&](std::size_t c, std::size_t d) {
      lambda.set(c, d, lambda_closed_form<Rational>(static_cast<unsigned>(c), static_cast<unsigned>(d), q));
    });
    r.exact("defining_identity", E_q2_in_x(8, q) * lambda == E_q2_of_sum(8, q));
  });
}

void suite_series(const QParam& q, Checks& out) {
  Recorder r("series", out);
  r.guarded("normalization", [&] {
    const auto f0 = fj_coefficient<Rational>(0, q, 6);
    bool pass = f0.value == 1 && f0.blocks.at(0) == 1;
    for (unsigned c = 1; c <= 6; ++c) pass = pass && f0.blocks.at(c) == 0;
    r.exact("normalization", pass, "blocks c = 1..6 cancel");
  });
  r.guarded("odd_coefficients_zero", [&] {
    bool pass = true;
    for (unsigned m : {1u, 3u, 5u}) pass = pass && fj_coefficient<Rational>(m, q, 6).value == 0;
    r.exact("odd_coefficients_zero", pass);
  });
  r.guarded("term_matches_rational_function", [&] {
    const QTables<Rational> t(q, 16, 20);
    bool pass = true;
    for (unsigned c = 0; c <= 4; ++c) {
      for (unsigned d = 0; d <= 2; ++d) {
        for (unsigned k = 0; k <= c; ++k) {
          const RationalFunction f = fj_term_rational_function(c, d, k);
          pass = pass && fj_term<Rational>(c, d, k, t) == f.numerator.eval(q) / f.denominator.eval(q);
        }
      }
    }
    r.exact("term_matches_rational_function", pass);
  });
  r.guarded("expansion_route", [&] {
    const unsigned max_c = 6;
    bool pass = true;
    for (unsigned d = 1; d <= 2; ++d) {
      const auto expansion = integrand_expansion(2 * d, 2 * max_c + 6 * d, q);
      pass = pass && integrate_expansion(expansion, 2 * d, q) == fj_coefficient<Rational>(2 * d, q, max_c).value;
    }
    r.exact("expansion_route", pass, "termwise integration of the integrand expansion");
  });
  r.guarded("finite_difference_oracle", [&] {
    const Rational tol = TruncationPolicy::default_tolerance();
    const auto a2 = fj_coefficient_converged<Rational>(2, q, tol);
    const Real f0 = fj_numeric(Real(0), q).value;
    PrecisionScope scope(working_digits(q));
    double errors[2];
    const Rational steps[2] = {Rational(1, 100), Rational(1, 200)};
    for (int i = 0; i < 2; ++i) {
      const Real h(steps[i]);
      const Real plus = fj_numeric(h, q).value;
      const Real minus = fj_numeric(Real(-h), q).value;
      const Real estimate = (plus + minus - 2 * f0) / (2 * h * h);
      errors[i] = abs_diff(estimate, Real(a2.value));
    }
    const double ratio = errors[0] / errors[1];
    r.within("finite_difference_oracle", std::fabs(ratio - 4.0), 1.0,
             "error ratio " + format_decimal(ratio, 6));
  });
  r.guarded("g6_scaling", [&] {
    const Rational tol = TruncationPolicy::default_tolerance();
    PowerSeries<Rational> series(4);
    for (unsigned m = 0; m <= 4; m += 2) series[m] = fj_coefficient_converged<Rational>(m, q, tol).value;
    double scaled[3];
    const Rational gs[3] = {Rational(1, 10), Rational(1, 20), Rational(1, 40)};
    for (int i = 0; i < 3; ++i) {
      const Real numeric = fj_numeric(Real(gs[i]), q).value;
      PrecisionScope scope(working_digits(q));
      const double diff = abs_diff(numeric, Real(series.eval(gs[i])));
      scaled[i] = diff / std::pow(to_double(gs[i]), 6);
    }
    double worst = 0;
    for (int i = 1; i < 3; ++i) worst = std::max(worst, std::fabs(std::log2(scaled[i] / scaled[0])));
    r.within("g6_scaling", worst, 1.0, "|log2| spread of remainder / g^6");
  });
  r.guarded("classical_limit_probe", [&] {
    const double target = 5.0 / 24.0;
    double previous = INFINITY;
    bool monotone = true;
    for (const char* text : {"9/10", "99/100", "999/1000"}) {
      const double value = to_double(fj_coefficient<Real>(2, QParam::parse(text), 12).value);
      const double err = std::fabs(value - target);
      monotone = monotone && err < previous;
      previous = err;
    }
    r.exact("classical_limit_probe", monotone && previous < 0.02 * target);
  });
}

void suite_graphs(const QParam& q, Checks& out) {
  Recorder r("graphs", out);
  r.guarded("block_equivalence", [&] {
    const QTables<Rational> t(q, 16, 20);
    bool pass = true;
    unsigned blocks = 0;
    for (unsigned dprime = 0; dprime <= 4; dprime += 2) {
      for (unsigned c = 0; c <= 4; ++c) {
        if ((2 * c + 3 * dprime) / 2 > kDefaultPairingLimit) continue;
        for (unsigned k = 0; k <= c; ++k) {
          const GraphBlock b = graph_block(c, dprime, k, q);
          const RationalFunction f = fj_term_rational_function(c, dprime / 2, k);
          pass = pass && b.omega_sum * f.denominator == f.numerator * b.amplitude;
          pass = pass && b.value == fj_term<Rational>(c, dprime / 2, k, t);
          pass = pass && b.encodings == binomial(dprime + k, k) * double_factorial_odd((2 * c + 3 * dprime) / 2);
          ++blocks;
        }
      }
    }
    r.exact("block_equivalence", pass, std::to_string(blocks) + " blocks");
  });
  r.guarded("aggregate_equivalence", [&] {
    bool pass = true;
    const std::pair<unsigned, unsigned> cases[] = {{0, 4}, {2, 4}, {4, 2}};
    for (const auto& [m, max_c] : cases) {
      pass = pass && graph_sum_coefficient(m, q, max_c).value == fj_coefficient<Rational>(m, q, max_c).value;
    }
    r.exact("aggregate_equivalence", pass, "m = 0, 2 (max_c 4) and m = 4 (max_c 2)");
  });
  r.guarded("flag_order_independence", [&] {
    const GraphBlock a = graph_block(2, 2, 1, q, FlagOrder::vertex_order);
    const GraphBlock b = graph_block(2, 2, 1, q, FlagOrder::reversed_vertex_order);
    r.exact("flag_order_independence", a.omega_sum == b.omega_sum);
  });
  r.guarded("empty_graph", [&] {
    const GraphEncoding empty;
    r.exact("empty_graph", omega_q(empty).eval(q) / a_q(empty).eval(q) == 1);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qcalc", "gauss", "pairings", "lambda", "series", "graphs", "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const QParam& q) {
  Checks out;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "qcalc") known = true, suite_qcalc(q, out);
  if (all || name == "gauss") known = true, suite_gauss(q, out);
  if (all || name == "pairings") known = true, suite_pairings(out);
  if (all || name == "lambda") known = true, suite_lambda(q, out);
  if (all || name == "series") known = true, suite_series(q, out);
  if (all || name == "graphs") known = true, suite_graphs(q, out);
  if (!known) throw ValidationError("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace qfj
