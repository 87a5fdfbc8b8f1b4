#pragma once

// Structured run reports and their serializations. JSON keys come out
// sorted, exact rationals are emitted as ["num", "den"] string pairs so no
// precision is lost, and wall-clock duration is kept out of the serialized
// body so identical inputs produce byte-identical output.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffsum/charsum.hpp"
#include "ffsum/gf.hpp"
#include "ffsum/lpoly.hpp"
#include "ffsum/seqcorr.hpp"

namespace ffsum {

using json = nlohmann::json;

enum class ReportFormat { json_format, csv, text };

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<double> tolerance;
};

struct RunReport {
  std::string command;
  json field;       // {} when no single field applies
  json parameters;  // echo of the flags that determined the run
  json results;
  std::vector<Verdict> verdicts;
  double duration_ms = 0.0;  // informational only, never serialized

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

inline json rational_to_json(const Rational& r) {
  return json::array({numerator(r).str(), denominator(r).str()});
}

inline json cyclo_to_json(const CycloNumber& z) {
  json coeffs = json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(rational_to_json(c));
  const auto approx = z.embed();
  return json{{"order", z.order()}, {"coeffs", coeffs}, {"approx", {approx.real(), approx.imag()}}};
}

inline json field_to_json(const FieldSpec& f) {
  return json{{"p", f.p()}, {"e", f.e()}, {"q", f.q()}, {"modulus", f.modulus()}};
}

inline json verdict_to_json(const Verdict& v) {
  json j{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}};
  if (v.tolerance) j["tolerance"] = *v.tolerance;
  return j;
}

inline json series_to_json(const SumSeries& series) {
  json vals = json::array();
  for (const auto& v : series.values) vals.push_back(cyclo_to_json(v));
  return json{{"label", series.label}, {"values", vals}};
}

inline json lpoly_to_json(const LPolynomial& L) {
  json coeffs = json::array();
  for (const auto& c : L.coeffs) coeffs.push_back(cyclo_to_json(c));
  return json{{"context", L.context}, {"degree", L.degree()}, {"coeffs", coeffs}};
}

inline json report_to_json(const RunReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  return json{{"command", r.command},
              {"field", r.field},
              {"parameters", r.parameters},
              {"results", r.results},
              {"verdicts", verdicts}};
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace detail {

inline void csv_flatten(const std::string& prefix, const json& j, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) csv_flatten(prefix.empty() ? k : prefix + "." + k, v, out);
  } else if (j.is_array()) {
    json flat = j;
    out << csv_escape(prefix) << "," << csv_escape(flat.dump()) << "\n";
  } else {
    out << csv_escape(prefix) << "," << csv_escape(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace detail

inline std::string emit_report(const RunReport& r, ReportFormat format) {
  if (format == ReportFormat::json_format) {
    return report_to_json(r).dump(2) + "\n";
  }
  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << "key,value\n";
    out << "command," << csv_escape(r.command) << "\n";
    detail::csv_flatten("field", r.field, out);
    detail::csv_flatten("parameters", r.parameters, out);
    detail::csv_flatten("results", r.results, out);
    for (const auto& v : r.verdicts)
      out << csv_escape("verdict." + v.name) << "," << (v.pass ? "pass" : "fail") << "\n";
    return out.str();
  }
  std::ostringstream out;
  out << r.command << "\n";
  if (!r.field.empty()) out << "field: " << r.field.dump() << "\n";
  if (!r.parameters.empty()) out << "parameters: " << r.parameters.dump() << "\n";
  if (!r.results.empty()) out << "results: " << r.results.dump(2) << "\n";
  for (const auto& v : r.verdicts) {
    out << (v.pass ? "PASS" : "FAIL") << "  " << v.name;
    if (!v.detail.empty()) out << "  (" << v.detail << ")";
    out << "\n";
  }
  return out.str();
}

/// Parses an element as a plain residue ("3") or a coefficient tuple
/// ("1:0:2", ascending powers of the basis).
inline FieldElement parse_element(const FieldSpec& field, const std::string& text) {
  std::vector<i64> coeffs;
  std::string cur;
  for (char ch : text + ":") {
    if (ch == ':') {
      if (cur.empty()) throw std::invalid_argument("parse_element: empty coefficient in '" + text + "'");
      coeffs.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (coeffs.size() == 1) return field.from_int(coeffs[0]);
  if (static_cast<int>(coeffs.size()) != field.e())
    throw std::invalid_argument("parse_element: expected 1 or e coefficients in '" + text + "'");
  return field.element(std::move(coeffs));
}

/// Comma-separated ascending coefficients, each an element as above;
/// "0,1,0,1" is x^3 + x over a prime field.
inline std::vector<FieldElement> parse_poly(const FieldSpec& field, const std::string& text) {
  std::vector<FieldElement> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw std::invalid_argument("parse_poly: empty coefficient in '" + text + "'");
      out.push_back(parse_element(field, cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (out.empty()) throw std::invalid_argument("parse_poly: no coefficients in '" + text + "'");
  return out;
}

inline std::string poly_str(const std::vector<FieldElement>& f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f[i].str();
  }
  return s;
}

}  // namespace ffsum
