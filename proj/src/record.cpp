#include "qfj/record.hpp"

#include "qfj/errors.hpp"
#include "qfj/scalar.hpp"

namespace qfj {

namespace {

constexpr const char* kSurdMarker = "sqrt(1-q)";

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("record is missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("record field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json to_json(const ResultRecord& r) {
  Json j;
  j["quantity"] = r.quantity;
  j["inputs"] = r.inputs;
  if (!r.exact_value) {
    j["exact_value"] = nullptr;
  } else if (r.exact_value->surd) {
    j["exact_value"] = Json{{"rational", r.exact_value->expression}, {"surd", kSurdMarker}};
  } else {
    j["exact_value"] = r.exact_value->expression;
  }
  j["float_value"] = r.float_value;
  j["truncation_terms_used"] = r.truncation_terms_used;
  j["residual"] = r.residual ? Json(*r.residual) : Json(nullptr);
  j["suite_pass"] = r.suite_pass ? Json(*r.suite_pass) : Json(nullptr);
  return j;
}

ResultRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("record must be a JSON object");
  ResultRecord r;
  r.quantity = field<std::string>(j, "quantity");
  if (!j.contains("inputs") || !j.at("inputs").is_object()) throw ParseError("record inputs must be an object");
  r.inputs = j.at("inputs");
  if (!j.contains("exact_value")) throw ParseError("record is missing field 'exact_value'");
  const Json& exact = j.at("exact_value");
  if (exact.is_string()) {
    r.exact_value = ExactValue{exact.get<std::string>(), false};
  } else if (exact.is_object()) {
    if (field<std::string>(exact, "surd") != kSurdMarker) throw ParseError("unknown surd marker");
    r.exact_value = ExactValue{field<std::string>(exact, "rational"), true};
  } else if (!exact.is_null()) {
    throw ParseError("record field 'exact_value' has the wrong type");
  }
  r.float_value = field<double>(j, "float_value");
  r.truncation_terms_used = field<std::size_t>(j, "truncation_terms_used");
  if (!j.contains("residual") || !j.contains("suite_pass")) throw ParseError("record is missing optional fields");
  if (!j.at("residual").is_null()) r.residual = field<double>(j, "residual");
  if (!j.at("suite_pass").is_null()) r.suite_pass = field<bool>(j, "suite_pass");
  return r;
}

std::string to_json_line(const ResultRecord& r) { return to_json(r).dump(); }

ResultRecord parse_json_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return record_from_json(j);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::vector<std::string> csv_header() {
  return {"quantity", "inputs", "exact_value", "surd", "float_value", "truncation_terms_used", "residual",
          "suite_pass"};
}

std::vector<std::string> csv_fields(const ResultRecord& r) {
  return {r.quantity,
          r.inputs.dump(),
          r.exact_value ? r.exact_value->expression : "",
          r.exact_value && r.exact_value->surd ? kSurdMarker : "",
          format_decimal(r.float_value, 17),
          std::to_string(r.truncation_terms_used),
          r.residual ? format_decimal(*r.residual, 17) : "",
          r.suite_pass ? (*r.suite_pass ? "true" : "false") : ""};
}

}  // namespace qfj
