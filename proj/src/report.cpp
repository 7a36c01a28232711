#include "hbarkit/report.hpp"

#include <algorithm>

namespace hbarkit {

using nlohmann::json;

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void to_json(json& j, const Check& c) { j = json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

void from_json(const json& j, Check& c) {
  j.at("name").get_to(c.name);
  j.at("passed").get_to(c.passed);
  j.at("detail").get_to(c.detail);
}

void to_json(json& j, const Report& r) {
  j = json{{"schema_version", r.schema_version}, {"command", r.command}, {"result", r.result}, {"checks", r.checks}};
}

void from_json(const json& j, Report& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("command").get_to(r.command);
  r.result = j.at("result");
  j.at("checks").get_to(r.checks);
}

json rational_json(const Rational& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

json hbar_json(const HbarScalar& s) {
  json out = json::object();
  for (const auto& [k, c] : s.terms()) out[std::to_string(k)] = rational_json(c);
  return out;
}

HbarScalar hbar_from_json(const json& j) {
  HbarScalar s;
  for (const auto& [k, c] : j.items()) s.add_term(std::stoi(k), rational_from_json(c));
  return s;
}

namespace {

json ladder_terms(const std::map<Ladder, HbarScalar>& terms, const char* first, const char* second) {
  json out = json::array();
  for (const auto& [key, c] : terms)
    out.push_back(json{{first, key.creation}, {second, key.annihilation}, {"coefficient", hbar_json(c)}});
  return out;
}

}  // namespace

json operator_json(const QOperator& q) {
  return json{{"text", q.to_string()}, {"terms", ladder_terms(q.terms(), "creation", "annihilation")}};
}

json symbol_json(const SymbolPoly& s) {
  return json{{"text", s.to_string()}, {"terms", ladder_terms(s.terms(), "x", "y")}};
}

json poly_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exponents", e}, {"coefficient", rational_json(c)}});
  return json{{"text", p.to_string()}, {"variables", p.variables()}, {"terms", terms}};
}

json vector_json(const BargmannVector& v) {
  json terms = json::object();
  for (const auto& [m, c] : v.terms()) terms[std::to_string(m)] = hbar_json(c);
  return json{{"text", v.to_string()}, {"coefficients", terms}};
}

json upoly_json(const UPoly& p) {
  json terms = json::object();
  for (const auto& [m, c] : p.terms()) terms[std::to_string(m)] = hbar_json(c);
  return json{{"text", p.to_string()}, {"coefficients", terms}};
}

}  // namespace hbarkit
