// qfj: command-line front end for q-Gaussian moments, the normalization
// constant, pairing weights, the interaction series and its graph sum.

#include "qfj/fseries.hpp"
#include "qfj/qgraphs.hpp"
#include "qfj/record.hpp"
#include "qfj/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>

namespace {

using namespace qfj;

constexpr const char* kVersion = "1.0.0";

enum class Exit { ok = 0, check_failed = 1, invalid = 2 };

struct Common {
  std::string q = "1/2";
  std::size_t max_terms = 512;
  std::string tol = "1e-30";
  std::string format = "json";
  std::string out;
  bool reproducible = false;
  bool floating = false;
  // set after parsing from the chosen subcommand
  bool max_terms_given = false;
  bool format_given = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--q", c.q, "deformation parameter as NUM/DEN (decimals only with --float)");
  sub->add_option("--max-terms", c.max_terms, "truncation length of infinite sums")->check(CLI::PositiveNumber);
  sub->add_option("--tol", c.tol, "relative tail tolerance for float-mode sums");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
  sub->add_flag("--reproducible", c.reproducible, "omit the metadata envelope");
  sub->add_flag("--float", c.floating, "float mode; accepts decimal q");
}

QParam parse_q(const std::string& text, bool floating) {
  if (!floating && !is_ratio_literal(text)) {
    throw ValidationError("q must be an exact rational such as 999/1000; decimal input needs --float");
  }
  return QParam::parse(text);
}

Rational parse_tolerance(const std::string& text) {
  const Rational tol = parse_rational(text);
  if (tol < 0) throw ValidationError("--tol must be non-negative");
  return tol;
}

TruncationPolicy float_policy(const Common& c) { return TruncationPolicy::floating(c.max_terms, parse_tolerance(c.tol)); }

Json base_inputs(const Common& c, const std::string& command, const QParam& q) {
  Json j;
  j["command"] = command;
  j["q"] = format_rational(q.value());
  j["max_terms"] = c.max_terms;
  j["tol"] = c.tol;
  j["float"] = c.floating;
  return j;
}

std::string indexed(const std::string& name, long long index) { return name + "[" + std::to_string(index) + "]"; }

ExactValue exact(const Rational& r) { return {format_rational(r), false}; }

double as_double(const Rational& r) { return r.convert_to<double>(); }

/// Writes records or a custom table to stdout or the --out file.
class Output {
public:
  explicit Output(const Common& c) : format_(c.format), reproducible_(c.reproducible) {
    if (!c.out.empty()) {
      file_ = std::make_unique<std::ofstream>(c.out, std::ios::binary);
      if (!*file_) throw ValidationError("cannot open output file '" + c.out + "'");
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void record(const ResultRecord& r) {
    if (format_ == "csv") {
      if (!header_written_) {
        stream() << csv_row(csv_header());
        header_written_ = true;
      }
      stream() << csv_row(csv_fields(r));
    } else {
      envelope();
      stream() << to_json_line(r) << '\n';
    }
  }

  void table_row(const std::vector<std::string>& fields) { stream() << csv_row(fields); }

private:
  void envelope() {
    if (reproducible_ || envelope_written_) return;
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    Json meta;
    meta["metadata"] = Json{{"tool", "qfj"}, {"version", kVersion}, {"generated_at", stamp}};
    stream() << meta.dump() << '\n';
    envelope_written_ = true;
  }

  std::string format_;
  bool reproducible_;
  bool header_written_ = false;
  bool envelope_written_ = false;
  std::unique_ptr<std::ofstream> file_;
};

// moments ------------------------------------------------------------------

struct MomentsArgs {
  unsigned max_k = 6;
  bool check = false;
};

Exit cmd_moments(const Common& c, const MomentsArgs& a) {
  const QParam q = parse_q(c.q, c.floating);
  const TruncationPolicy trunc = float_policy(c);
  Output out(c);
  bool ok = true;
  for (unsigned k = 0; k <= a.max_k; ++k) {
    ResultRecord r;
    r.quantity = indexed("moment", k);
    r.inputs = base_inputs(c, "moments", q);
    r.inputs["k"] = k;
    const MomentResult m = moment_by_integration(k, q, trunc);
    if (k % 2 == 1) {
      r.exact_value = exact(Rational(0));
      r.float_value = 0;
      r.residual = 0.0;
    } else {
      const Rational closed = moment_closed_form(k / 2).eval(q);
      r.exact_value = exact(closed);
      r.float_value = to_double(m.value);
      r.truncation_terms_used = m.terms_used;
      r.residual = std::fabs(to_double(Real(m.value - Real(closed))));
    }
    if (a.check) {
      r.suite_pass = *r.residual < 1e-8;
      ok = ok && *r.suite_pass;
    }
    out.record(r);
  }
  return ok ? Exit::ok : Exit::check_failed;
}

// cq -----------------------------------------------------------------------

struct CqArgs {
  std::string method = "both";
  bool exact_mode = false;
  std::string sweep;
};

struct Sweep {
  Rational from;
  Rational to;
  unsigned count = 0;
};

Sweep parse_sweep(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw ValidationError("--sweep expects FROM:TO:COUNT");
  }
  Sweep s{parse_rational(text.substr(0, first)), parse_rational(text.substr(first + 1, second - first - 1)), 0};
  const Rational count = parse_rational(text.substr(second + 1));
  if (denominator(count) != 1 || count < 2 || count > 100000) {
    throw ValidationError("--sweep COUNT must be an integer between 2 and 100000");
  }
  s.count = count.convert_to<unsigned>();
  // validate the endpoints up front
  QParam(s.from);
  QParam(s.to);
  return s;
}

Exit cmd_cq(const Common& c, const CqArgs& a) {
  if (a.exact_mode && !c.max_terms_given) {
    throw ValidationError("exact mode needs an explicit --max-terms");
  }
  const TruncationPolicy trunc = a.exact_mode ? TruncationPolicy::exact(c.max_terms) : float_policy(c);
  Output out(c);

  if (!a.sweep.empty()) {
    const Sweep s = parse_sweep(a.sweep);
    const bool csv = !c.format_given || c.format == "csv";
    const double root = std::sqrt(2 * std::numbers::pi);
    if (csv) out.table_row({"q", "c_q", "sqrt_2pi", "method", "max_terms"});
    for (unsigned i = 0; i < s.count; ++i) {
      const QParam q(s.from + (s.to - s.from) * Rational(i, s.count - 1));
      const NormalizationResult r = c_of_q(q, trunc);
      if (csv) {
        out.table_row({format_decimal(as_double(q.value()), 17), format_decimal(r.float_value, 17),
                       format_decimal(root, 17), std::string(to_string(r.method)), std::to_string(c.max_terms)});
      } else {
        ResultRecord rec;
        rec.quantity = "c_q";
        rec.inputs = base_inputs(c, "cq", q);
        rec.float_value = to_double(r.float_value);
        rec.truncation_terms_used = r.terms_used;
        out.record(rec);
      }
    }
    return Exit::ok;
  }

  const QParam q = parse_q(c.q, c.floating);
  std::vector<NormalizationMethod> methods;
  if (a.method == "interchanged" || a.method == "both") methods.push_back(NormalizationMethod::interchanged_sum);
  if (a.method == "double" || a.method == "both") methods.push_back(NormalizationMethod::double_sum);
  std::vector<Real> values;
  for (NormalizationMethod m : methods) {
    const NormalizationResult r = c_of_q(q, trunc, m);
    if (!r.converged) {
      std::cerr << "warning: " << to_string(m) << " did not reach --tol within " << c.max_terms
                << " terms; raise --max-terms\n";
    }
    ResultRecord rec;
    rec.quantity = "c_q[" + std::string(to_string(m)) + "]";
    rec.inputs = base_inputs(c, "cq", q);
    rec.inputs["exact"] = a.exact_mode;
    if (r.surd_value) rec.exact_value = ExactValue{format_rational(r.surd_value->rational_part()), true};
    rec.float_value = to_double(r.float_value);
    rec.truncation_terms_used = r.terms_used;
    out.record(rec);
    values.push_back(r.float_value);
  }
  if (values.size() == 2) {
    PrecisionScope scope(working_digits(q));
    ResultRecord rec;
    rec.quantity = "c_q[difference]";
    rec.inputs = base_inputs(c, "cq", q);
    rec.inputs["exact"] = a.exact_mode;
    rec.float_value = std::fabs(to_double(Real(values[0] - values[1])));
    rec.suite_pass = rec.float_value < 1e-12;
    out.record(rec);
  }
  return Exit::ok;
}

// pairings -----------------------------------------------------------------

struct PairingsArgs {
  unsigned n = 0;
  bool list = false;
  bool sum = false;
};

Exit cmd_pairings(const Common& c, const PairingsArgs& a) {
  const QParam q = parse_q(c.q, c.floating);
  Output out(c);
  if (a.list) {
    for (const OrderedPairing& p : enumerate_pairings(a.n)) {
      const unsigned w = weight_exponent(p);
      ResultRecord r;
      r.quantity = "pairing_weight";
      r.inputs = base_inputs(c, "pairings", q);
      r.inputs["n"] = a.n;
      r.inputs["pairing"] = p.to_string();
      r.inputs["weight_exponent"] = w;
      r.exact_value = ExactValue{QPolynomial::monomial(w).to_string(), false};
      r.float_value = as_double(ipow(q.value(), w));
      out.record(r);
    }
  }
  bool ok = true;
  if (a.sum || !a.list) {
    const QPolynomial sum = weighted_pairing_sum(a.n);
    const QPolynomial closed = q_double_factorial(a.n);
    ResultRecord r;
    r.quantity = indexed("weighted_pairing_sum", a.n);
    r.inputs = base_inputs(c, "pairings", q);
    r.inputs["n"] = a.n;
    r.inputs["closed_form"] = closed.to_string();
    r.exact_value = ExactValue{sum.to_string(), false};
    r.float_value = as_double(sum.eval(q));
    r.truncation_terms_used = double_factorial_odd(a.n).convert_to<std::size_t>();
    r.suite_pass = sum == closed;
    ok = *r.suite_pass;
    out.record(r);
  }
  return ok ? Exit::ok : Exit::check_failed;
}

// series -------------------------------------------------------------------

struct SeriesArgs {
  unsigned order = 4;
  unsigned max_c = 12;
  std::string check = "none";
};

unsigned graph_max_c(unsigned m, unsigned max_c) {
  const unsigned limit_flags = 2 * kDefaultPairingLimit;
  if (3 * m > limit_flags) {
    throw ResourceError("graph check for g^" + std::to_string(m) + " needs more than " +
                        std::to_string(limit_flags) + " flags");
  }
  return std::min(max_c, (limit_flags - 3 * m) / 2);
}

Exit cmd_series(const Common& c, const SeriesArgs& a) {
  const QParam q = parse_q(c.q, c.floating);
  Output out(c);
  for (unsigned m = 0; m <= a.order; ++m) {
    ResultRecord r;
    r.quantity = indexed("fj_coefficient", m);
    r.inputs = base_inputs(c, "series", q);
    r.inputs["max_c"] = a.max_c;
    r.truncation_terms_used = a.max_c + 1;
    if (c.floating) {
      const FjCoefficient<Real> f = fj_coefficient<Real>(m, q, a.max_c);
      r.float_value = to_double(f.value);
      r.residual = std::fabs(to_double(f.blocks.back()));
    } else {
      const FjCoefficient<Rational> f = fj_coefficient<Rational>(m, q, a.max_c);
      r.exact_value = exact(f.value);
      r.float_value = as_double(f.value);
      r.residual = std::fabs(as_double(f.blocks.back()));
    }
    out.record(r);
  }

  bool ok = true;
  if (a.check == "graphs" || a.check == "all") {
    for (unsigned m = 0; m <= a.order; m += 2) {
      const unsigned max_c = graph_max_c(m, a.max_c);
      const GraphSum g = graph_sum_coefficient(m, q, max_c);
      const Rational series = fj_coefficient<Rational>(m, q, max_c).value;
      ResultRecord r;
      r.quantity = indexed("graph_check", m);
      r.inputs = base_inputs(c, "series", q);
      r.inputs["max_c"] = max_c;
      r.exact_value = exact(g.value);
      r.float_value = as_double(g.value);
      r.truncation_terms_used = max_c + 1;
      r.residual = std::fabs(as_double(Rational(g.value - series)));
      r.suite_pass = g.value == series;
      ok = ok && *r.suite_pass;
      out.record(r);
    }
  }
  if (a.check == "numeric" || a.check == "all") {
    const TruncationPolicy trunc = float_policy(c);
    const Rational tol = TruncationPolicy::default_tolerance();
    const Real f0 = fj_numeric(Real(0), q, trunc).value;
    {
      ResultRecord r;
      r.quantity = indexed("numeric_check", 0);
      r.inputs = base_inputs(c, "series", q);
      r.float_value = to_double(f0);
      r.residual = std::fabs(r.float_value - 1.0);
      r.suite_pass = *r.residual < 1e-12;
      ok = ok && *r.suite_pass;
      out.record(r);
    }
    if (a.order >= 2) {
      const FjCoefficient<Rational> a2 = fj_coefficient_converged<Rational>(2, q, tol, a.max_c);
      PrecisionScope scope(working_digits(q));
      double errors[2];
      double estimates[2];
      const Rational steps[2] = {Rational(1, 100), Rational(1, 200)};
      for (int i = 0; i < 2; ++i) {
        const Real h(steps[i]);
        const Real sum = fj_numeric(h, q, trunc).value + fj_numeric(Real(-h), q, trunc).value;
        const Real estimate = (sum - 2 * f0) / (2 * h * h);
        estimates[i] = to_double(estimate);
        errors[i] = std::fabs(to_double(Real(estimate - Real(a2.value))));
      }
      const double ratio = errors[0] / errors[1];
      ResultRecord r;
      r.quantity = indexed("numeric_check", 2);
      r.inputs = base_inputs(c, "series", q);
      r.inputs["max_c"] = a2.blocks.size() - 1;
      r.inputs["steps"] = Json::array({"1/100", "1/200"});
      r.inputs["error_ratio"] = ratio;
      r.float_value = estimates[1];
      r.residual = errors[1];
      r.suite_pass = ratio >= 3 && ratio <= 5;
      ok = ok && *r.suite_pass;
      out.record(r);
    }
  }
  return ok ? Exit::ok : Exit::check_failed;
}

// graphs -------------------------------------------------------------------

struct GraphsArgs {
  unsigned m = 2;
  unsigned max_c = 4;
};

Exit cmd_graphs(const Common& c, const GraphsArgs& a) {
  if (a.m % 2 == 1) throw ValidationError("--m must be even");
  const QParam q = parse_q(c.q, c.floating);
  Output out(c);
  const bool csv = c.format == "csv";
  if (csv) {
    out.table_row({"c", "dprime", "k", "encodings", "block_value", "block_exact", "cumulative", "cumulative_exact"});
  }
  Rational cumulative(0);
  for (unsigned cc = 0; cc <= a.max_c; ++cc) {
    for (unsigned k = 0; k <= cc; ++k) {
      const GraphBlock b = graph_block(cc, a.m, k, q);
      cumulative += b.value;
      if (csv) {
        out.table_row({std::to_string(cc), std::to_string(a.m), std::to_string(k), b.encodings.str(),
                       format_decimal(as_double(b.value), 17), format_rational(b.value),
                       format_decimal(as_double(cumulative), 17), format_rational(cumulative)});
        continue;
      }
      ResultRecord r;
      r.quantity = "graph_block[" + std::to_string(cc) + "," + std::to_string(a.m) + "," + std::to_string(k) + "]";
      r.inputs = base_inputs(c, "graphs", q);
      r.inputs["c"] = cc;
      r.inputs["dprime"] = a.m;
      r.inputs["k"] = k;
      r.inputs["encodings"] = b.encodings.str();
      r.inputs["cumulative"] = format_rational(cumulative);
      r.exact_value = exact(b.value);
      r.float_value = as_double(b.value);
      r.truncation_terms_used = b.encodings.convert_to<std::size_t>();
      out.record(r);
    }
  }
  const Rational series = fj_coefficient<Rational>(a.m, q, a.max_c).value;
  if (csv) return cumulative == series ? Exit::ok : Exit::check_failed;
  ResultRecord r;
  r.quantity = indexed("graph_sum_coefficient", a.m);
  r.inputs = base_inputs(c, "graphs", q);
  r.inputs["max_c"] = a.max_c;
  r.exact_value = exact(cumulative);
  r.float_value = as_double(cumulative);
  r.truncation_terms_used = a.max_c + 1;
  r.suite_pass = cumulative == series;
  out.record(r);
  return *r.suite_pass ? Exit::ok : Exit::check_failed;
}

// verify -------------------------------------------------------------------

Exit cmd_verify(const Common& c, const std::string& suite) {
  const QParam q = parse_q(c.q, c.floating);
  const std::vector<CheckResult> checks = run_suite(suite, q);
  Output out(c);
  bool ok = true;
  for (const CheckResult& check : checks) {
    ResultRecord r;
    r.quantity = "verify." + check.suite + "." + check.name;
    r.inputs = base_inputs(c, "verify", q);
    r.inputs["suite"] = suite;
    if (!check.detail.empty()) r.inputs["detail"] = check.detail;
    r.float_value = check.deviation;
    r.suite_pass = check.pass;
    ok = ok && check.pass;
    out.record(r);
  }
  std::cerr << (ok ? "PASS" : "FAIL") << ": " << checks.size() << " checks in suite " << suite << '\n';
  return ok ? Exit::ok : Exit::check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Gaussian integrals, pairing weights and graph sums"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;

  MomentsArgs moments;
  auto* moments_cmd = app.add_subcommand("moments", "closed-form and integrated moments of the q-Gaussian");
  add_common(moments_cmd, common);
  moments_cmd->add_option("--max-k", moments.max_k, "largest moment index");
  moments_cmd->add_flag("--check", moments.check, "fail (exit 1) when a moment deviates by more than 1e-8");

  CqArgs cq;
  auto* cq_cmd = app.add_subcommand("cq", "normalization constant c(q)");
  add_common(cq_cmd, common);
  cq_cmd->add_option("--method", cq.method, "summation route")->check(CLI::IsMember({"interchanged", "double", "both"}));
  cq_cmd->add_flag("--exact", cq.exact_mode, "exact rational sums with --max-terms terms");
  cq_cmd->add_option("--sweep", cq.sweep, "FROM:TO:COUNT grid of q values (decimals allowed)");

  PairingsArgs pairings;
  auto* pairings_cmd = app.add_subcommand("pairings", "ordered pairings and their weights");
  add_common(pairings_cmd, common);
  pairings_cmd->add_option("--n", pairings.n, "number of pairs")->required();
  pairings_cmd->add_flag("--list", pairings.list, "list every pairing with its weight");
  pairings_cmd->add_flag("--sum", pairings.sum, "weighted sum against the closed form");

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "coefficients of the interaction series");
  add_common(series_cmd, common);
  series_cmd->add_option("--order", series.order, "highest power of g");
  series_cmd->add_option("--max-c", series.max_c, "truncation of the c-summation")->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--check", series.check, "cross-checks to run")
      ->check(CLI::IsMember({"none", "graphs", "numeric", "all"}));

  GraphsArgs graphs;
  auto* graphs_cmd = app.add_subcommand("graphs", "per-block graph sums");
  add_common(graphs_cmd, common);
  graphs_cmd->add_option("--m", graphs.m, "power of g (number of three-valent vertices)");
  graphs_cmd->add_option("--max-c", graphs.max_c, "largest number of two-valent vertices");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(qfj::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(Exit::invalid);
  }

  for (CLI::App* sub : app.get_subcommands()) {
    common.max_terms_given = sub->get_option("--max-terms")->count() > 0;
    common.format_given = sub->get_option("--format")->count() > 0;
  }

  try {
    Exit code = Exit::ok;
    if (moments_cmd->parsed()) code = cmd_moments(common, moments);
    else if (cq_cmd->parsed()) code = cmd_cq(common, cq);
    else if (pairings_cmd->parsed()) code = cmd_pairings(common, pairings);
    else if (series_cmd->parsed()) code = cmd_series(common, series);
    else if (graphs_cmd->parsed()) code = cmd_graphs(common, graphs);
    else if (verify_cmd->parsed()) code = cmd_verify(common, suite);
    return static_cast<int>(code);
  } catch (const qfj::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Exit::invalid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Exit::invalid);
  }
}
