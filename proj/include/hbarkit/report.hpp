#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hbarkit/bargmann.hpp"
#include "hbarkit/multi_poly.hpp"
#include "hbarkit/normal_form.hpp"
#include "hbarkit/qoperator.hpp"

namespace hbarkit {

/// Verdict of one property check attached to a report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

/// Machine-readable result of one command. Exact values are encoded as
/// {"num": "...", "den": "..."} strings; floats appear only in Gevrey fields.
struct Report {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::vector<std::string> command;
  nlohmann::json result = nlohmann::json::object();
  std::vector<Check> checks;

  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
/// {"<exponent>": rational, ...}
nlohmann::json hbar_json(const HbarScalar& s);
HbarScalar hbar_from_json(const nlohmann::json& j);
nlohmann::json operator_json(const QOperator& q);
nlohmann::json symbol_json(const SymbolPoly& s);
nlohmann::json poly_json(const MultiPoly& p);
nlohmann::json vector_json(const BargmannVector& v);
nlohmann::json upoly_json(const UPoly& p);

}  // namespace hbarkit
