#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qfj {

using Json = nlohmann::ordered_json;

/// An exact value: a rational "p/q", a polynomial in q, or a rational times
/// sqrt(1-q).
struct ExactValue {
  std::string expression;
  bool surd = false;
  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

/// One output row of the command-line tool.
struct ResultRecord {
  std::string quantity;
  Json inputs = Json::object();
  std::optional<ExactValue> exact_value;
  double float_value = 0;
  std::size_t truncation_terms_used = 0;
  std::optional<double> residual;
  std::optional<bool> suite_pass;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

Json to_json(const ResultRecord& r);
/// Throws ParseError when fields are missing or mistyped.
ResultRecord record_from_json(const Json& j);

/// Single-line JSON text of a record.
std::string to_json_line(const ResultRecord& r);
ResultRecord parse_json_line(const std::string& line);

/// RFC 4180 CSV: quotes fields holding commas, quotes or line breaks.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);
std::vector<std::string> csv_header();
std::vector<std::string> csv_fields(const ResultRecord& r);

}  // namespace qfj
