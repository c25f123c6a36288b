#pragma once

// JSON schemas for polyhedra, norms, body specifications, and reports.
// Rationals travel as strings "p/q" (or "p" when the denominator is 1) and
// round-trip bit-exactly.

#include <json.hpp>
#include <string>
#include <variant>

#include "asymgauge/analytic.hpp"
#include "asymgauge/laws.hpp"
#include "asymgauge/norm.hpp"
#include "asymgauge/scenarios.hpp"

namespace asymgauge {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const HPoly& h);
Json to_json(const VPoly& v);

Rational rational_from_json(const Json& j, const std::string& field);
RatVector vector_from_json(const Json& j, Index dim, const std::string& field);
HPoly hpoly_from_json(const Json& j);
VPoly vpoly_from_json(const Json& j);

// A body specification: a polyhedron in either representation or the name
// of a registered analytic body.  Accepts the bare polyhedron schema, the
// norm wrapper {"dim": d, "ball": {...}}, and {"kind": "analytic", ...}.
struct BodySpec {
  Index dim = 0;
  std::variant<HPoly, VPoly, const AnalyticBody*> payload;

  bool analytic() const {
    return std::holds_alternative<const AnalyticBody*>(payload);
  }
};

BodySpec parse_body(const Json& j);
Json to_json(const BodySpec& spec);

// Reports.
Json analysis_report(const AsymNorm& n);
Json to_json(const EquivCert& cert);
Json to_json(const LawReport& report);
Json to_json(const ScenarioReport& report);

}  // namespace asymgauge
