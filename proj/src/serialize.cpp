#include "asymgauge/serialize.hpp"

namespace asymgauge {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

Json to_json(const HPoly& h) {
  Json rows = Json::array();
  for (Index i = 0; i < h.rows(); ++i)
    rows.push_back(to_json(RatVector(h.A.row(i).transpose())));
  return Json{{"dim", h.dim},
              {"kind", "hrep"},
              {"A", rows},
              {"b", to_json(h.b)}};
}

Json to_json(const VPoly& v) {
  Json pts = Json::array(), rays = Json::array();
  for (const auto& p : v.points) pts.push_back(to_json(p));
  for (const auto& r : v.rays) rays.push_back(to_json(r));
  return Json{{"dim", v.dim},
              {"kind", "vrep"},
              {"points", pts},
              {"rays", rays}};
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (!j.is_string())
    throw ParseError(field + ": rationals are strings like \"3/2\"");
  auto r = Rational::parse(j.get<std::string>());
  if (!r)
    throw ParseError(field + ": malformed rational \"" +
                     j.get<std::string>() + "\"");
  return *r;
}

RatVector vector_from_json(const Json& j, Index dim, const std::string& field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim)
    throw ParseError(field + ": expected an array of length " +
                     std::to_string(dim));
  RatVector v(dim);
  for (Index i = 0; i < dim; ++i)
    v[i] = rational_from_json(j[static_cast<std::size_t>(i)],
                              field + "[" + std::to_string(i) + "]");
  return v;
}

namespace {

Index dim_from_json(const Json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("dim: required integer field");
  const long d = j["dim"].get<long>();
  if (d < 1) throw ParseError("dim: must be >= 1");
  return static_cast<Index>(d);
}

}  // namespace

HPoly hpoly_from_json(const Json& j) {
  const Index dim = dim_from_json(j);
  if (!j.contains("A") || !j["A"].is_array())
    throw ParseError("A: required matrix field");
  if (!j.contains("b") || !j["b"].is_array())
    throw ParseError("b: required vector field");
  const Index m = static_cast<Index>(j["A"].size());
  if (static_cast<Index>(j["b"].size()) != m)
    throw ParseError("b: length must match the rows of A");
  RatMatrix A(m, dim);
  for (Index i = 0; i < m; ++i)
    A.row(i) = vector_from_json(j["A"][static_cast<std::size_t>(i)], dim,
                                "A[" + std::to_string(i) + "]")
                   .transpose();
  RatVector b = vector_from_json(j["b"], m, "b");
  try {
    return HPoly(dim, std::move(A), std::move(b));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("A: ") + e.what());
  }
}

VPoly vpoly_from_json(const Json& j) {
  const Index dim = dim_from_json(j);
  std::vector<RatVector> points, rays;
  if (j.contains("points")) {
    if (!j["points"].is_array()) throw ParseError("points: expected an array");
    for (std::size_t k = 0; k < j["points"].size(); ++k)
      points.push_back(vector_from_json(j["points"][k], dim,
                                        "points[" + std::to_string(k) + "]"));
  }
  if (j.contains("rays")) {
    if (!j["rays"].is_array()) throw ParseError("rays: expected an array");
    for (std::size_t k = 0; k < j["rays"].size(); ++k)
      rays.push_back(vector_from_json(j["rays"][k], dim,
                                      "rays[" + std::to_string(k) + "]"));
  }
  try {
    return VPoly(dim, std::move(points), std::move(rays));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("rays: ") + e.what());
  }
}

BodySpec parse_body(const Json& j) {
  if (!j.is_object()) throw ParseError("body: expected a JSON object");
  if (j.contains("ball")) {
    BodySpec inner = parse_body(j["ball"]);
    if (j.contains("dim") && dim_from_json(j) != inner.dim)
      throw ParseError("dim: does not match the ball dimension");
    return inner;
  }
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("kind: required field (hrep, vrep, or analytic)");
  const std::string kind = j["kind"].get<std::string>();
  BodySpec spec;
  if (kind == "hrep") {
    HPoly h = hpoly_from_json(j);
    spec.dim = h.dim;
    spec.payload = std::move(h);
  } else if (kind == "vrep") {
    VPoly v = vpoly_from_json(j);
    spec.dim = v.dim;
    spec.payload = std::move(v);
  } else if (kind == "analytic") {
    if (!j.contains("name") || !j["name"].is_string())
      throw ParseError("name: required for analytic bodies");
    const AnalyticBody* body = find_body(j["name"].get<std::string>());
    if (!body)
      throw ParseError("name: unknown analytic body \"" +
                       j["name"].get<std::string>() + "\"");
    if (j.contains("dim") && dim_from_json(j) != body->dim)
      throw ParseError("dim: does not match the analytic body");
    spec.dim = body->dim;
    spec.payload = body;
  } else {
    throw ParseError("kind: must be hrep, vrep, or analytic");
  }
  return spec;
}

Json to_json(const BodySpec& spec) {
  if (const auto* h = std::get_if<HPoly>(&spec.payload)) return to_json(*h);
  if (const auto* v = std::get_if<VPoly>(&spec.payload)) return to_json(*v);
  const auto* body = std::get<const AnalyticBody*>(spec.payload);
  return Json{{"dim", body->dim}, {"kind", "analytic"}, {"name", body->name}};
}

Json analysis_report(const AsymNorm& n) {
  AsymNorm companion = canonical_qp(n);
  BoundednessCert rb = right_bounded(n, companion);
  BallDecomposition dec = ball_decomposition(n);
  StrongCompactness sc = strongly_compact(n.ball_vrep(), n);
  EquivCert eq = equivalent(n, companion);

  Json theta = Json::array();
  for (const auto& g : n.theta().gens) theta.push_back(to_json(g));
  Json extremes = Json::array();
  for (const auto& p : dec.extreme_hull.points) extremes.push_back(to_json(p));

  return Json{{"dim", n.dim()},
              {"ball", to_json(n.ball_hrep())},
              {"theta", theta},
              {"sym_ball", to_json(n.sym_ball_hrep())},
              {"qp_ball", to_json(companion.ball_hrep())},
              {"r_star", rb.r_star.str()},
              {"one_bounded", rb.one_bounded},
              {"extreme_points", extremes},
              {"ball_decomposition_check", dec.check},
              {"strongly_compact_ball", sc.strongly_compact},
              {"companion_equivalence",
               Json{{"kappa", eq.kappa.str()}, {"lambda", eq.lambda.str()}}}};
}

Json to_json(const EquivCert& cert) {
  if (!cert.equivalent)
    return Json{{"equivalent", false}, {"direction", to_json(cert.direction)}};
  return Json{{"equivalent", true},
              {"kappa", cert.kappa.str()},
              {"lambda", cert.lambda.str()}};
}

Json to_json(const LawReport& report) {
  Json laws = Json::array();
  for (const auto& law : report.laws) {
    Json failures = Json::array();
    for (const auto& f : law.failures)
      failures.push_back(Json{{"seed", f.seed}, {"witness", f.witness}});
    laws.push_back(Json{{"id", law.id},
                        {"name", law.name},
                        {"cases", law.cases},
                        {"failures", failures}});
  }
  return Json{{"config", Json{{"dim", report.config.dim},
                              {"n_vertices", report.config.n_vertices},
                              {"n_rays", report.config.n_rays},
                              {"coordinate_bound", report.config.coordinate_bound},
                              {"seed", report.config.seed}}},
              {"cases", report.cases},
              {"laws", laws},
              {"pass", report.pass()}};
}

Json to_json(const ScenarioReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"description", c.description},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass},
                          {"informational", c.informational}});
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json pt = Json::array();
    for (Index i = 0; i < w.size(); ++i) pt.push_back(w[i]);
    witnesses.push_back(pt);
  }
  return Json{{"name", report.name},
              {"checks", checks},
              {"witnesses", witnesses},
              {"pass", report.pass()}};
}

}  // namespace asymgauge
