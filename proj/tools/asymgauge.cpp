// asymgauge: exact analysis of asymmetric norms given by polyhedral unit
// balls, plus the analytic counterexample scenarios.  See README.md for the
// JSON schemas and subcommand reference.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asymgauge/rng.hpp"
#include "asymgauge/serialize.hpp"

namespace ag = asymgauge;

namespace {

ag::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ag::ParseError("cannot open " + path);
  ag::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ag::ParseError(path + ": " + e.what());
  }
  return j;
}

ag::BodySpec load_body(const std::string& path) {
  return ag::parse_body(load_json(path));
}

ag::AsymNorm norm_from(const ag::BodySpec& spec) {
  if (const auto* h = std::get_if<ag::HPoly>(&spec.payload))
    return ag::AsymNorm::from_hrep(*h);
  if (const auto* v = std::get_if<ag::VPoly>(&spec.payload))
    return ag::AsymNorm::from_vrep(*v);
  throw ag::ParseError("this command needs a polyhedral body (hrep or vrep)");
}

ag::RatVector parse_point(const std::string& text, ag::Index dim) {
  std::vector<ag::Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = ag::Rational::parse_decimal(item);
    if (!r) throw ag::ParseError("point: malformed coordinate \"" + item + "\"");
    coords.push_back(*r);
  }
  if (static_cast<ag::Index>(coords.size()) != dim)
    throw ag::ParseError("point: expected " + std::to_string(dim) +
                         " coordinates");
  ag::RatVector v(dim);
  for (ag::Index i = 0; i < dim; ++i)
    v[i] = coords[static_cast<std::size_t>(i)];
  return v;
}

void write_out(const ag::Json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ag::ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_scenario(const ag::ScenarioReport& rep) {
  std::cout << "scenario " << rep.name << "\n";
  for (const auto& c : rep.checks) {
    const char* tag = c.informational ? "info" : (c.pass ? " ok " : "FAIL");
    std::cout << "  [" << tag << "] " << c.description
              << "  expected: " << c.expected << "  computed: " << c.computed
              << "\n";
  }
  std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ASYMGAUGE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

int cmd_gauge(const std::string& body_path, const std::string& point,
              double tol) {
  ag::BodySpec spec = load_body(body_path);
  if (spec.analytic()) {
    const ag::AnalyticBody* body = std::get<const ag::AnalyticBody*>(spec.payload);
    ag::RatVector x = parse_point(point, spec.dim);
    ag::GaugeBracket g = ag::gauge_bisect(*body, ag::to_double_vector(x), tol);
    std::cout.precision(15);
    std::cout << "[" << g.lo << ", " << g.hi << "]\n";
    return 0;
  }
  ag::AsymNorm n = norm_from(spec);
  std::cout << n.gauge(parse_point(point, n.dim())).str() << "\n";
  return 0;
}

int cmd_analyze(const std::string& body_path, const std::string& out) {
  ag::AsymNorm n = norm_from(load_body(body_path));
  ag::Json report = ag::analysis_report(n);
  std::cout << "dim: " << report["dim"] << "\n"
            << "theta generators: " << report["theta"].dump() << "\n"
            << "sym_ball facets: " << report["sym_ball"]["A"].size() << "\n"
            << "qp_ball facets: " << report["qp_ball"]["A"].size() << "\n"
            << "r_star: " << report["r_star"].get<std::string>() << "\n"
            << "one_bounded: " << (report["one_bounded"].get<bool>() ? "true" : "false")
            << "\n"
            << "extreme_points: " << report["extreme_points"].dump() << "\n"
            << "ball_decomposition_check: "
            << (report["ball_decomposition_check"].get<bool>() ? "true" : "false")
            << "\n"
            << "strongly_compact_ball: "
            << (report["strongly_compact_ball"].get<bool>() ? "true" : "false")
            << "\n"
            << "companion_equivalence: kappa = "
            << report["companion_equivalence"]["kappa"].get<std::string>()
            << ", lambda = "
            << report["companion_equivalence"]["lambda"].get<std::string>()
            << "\n";
  write_out(report, out);
  const bool consistent =
      report["ball_decomposition_check"].get<bool>() &&
      report["strongly_compact_ball"].get<bool>();
  return consistent ? 0 : 1;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path,
              const std::string& out) {
  ag::AsymNorm a = norm_from(load_body(a_path));
  ag::AsymNorm b = norm_from(load_body(b_path));
  ag::EquivCert cert = ag::equivalent(a, b);
  ag::Json j = ag::to_json(cert);
  if (cert.equivalent)
    std::cout << "equivalent: kappa = " << cert.kappa.str()
              << ", lambda = " << cert.lambda.str() << "\n";
  else
    std::cout << "not equivalent; one-sided direction: "
              << ag::to_json(cert.direction).dump() << "\n";
  write_out(j, out);
  return 0;
}

int cmd_laws(const std::vector<int>& dims, int cases, std::uint64_t seed,
             const std::string& mutate, const std::string& out) {
  ag::MutationHook hook = ag::MutationHook::None;
  if (mutate == "l3-sym-scale")
    hook = ag::MutationHook::ScaleSymBallInSandwich;
  else if (!mutate.empty())
    throw ag::ParseError("unknown mutation hook \"" + mutate + "\"");

  ag::Json all = ag::Json::array();
  bool pass = true;
  for (int dim : dims) {
    ag::SpaceGenConfig cfg;
    cfg.dim = dim;
    cfg.seed = seed;
    ag::LawReport report = ag::run_laws(cfg, cases, hook);
    std::cout << "dim " << dim << " (" << cases << " cases per law)\n";
    for (const auto& law : report.laws) {
      std::cout << "  " << law.id << " " << law.name << ": "
                << (law.failures.empty() ? "pass" : "FAIL");
      if (!law.failures.empty())
        std::cout << "  first witness: " << law.failures[0].witness
                  << " (seed " << law.failures[0].seed << ")";
      std::cout << "\n";
    }
    pass = pass && report.pass();
    all.push_back(ag::to_json(report));
  }
  write_out(all.size() == 1 ? all[0] : all, out);
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_scenario(const std::string& name, int n, const std::string& out) {
  ag::ScenarioReport rep;
  if (name == "hyperbola")
    rep = ag::hyperbola_scenario();
  else if (name == "cylinder")
    rep = ag::cylinder_scenario(n);
  else if (name == "parabola")
    rep = ag::parabola_scenario();
  else
    throw ag::ParseError("unknown scenario \"" + name + "\"");
  print_scenario(rep);
  write_out(ag::to_json(rep), out);
  return rep.pass() ? 0 : 1;
}

int cmd_sample(const std::string& body_path, int count, std::uint64_t seed,
               double tol, const std::string& out) {
  ag::BodySpec spec = load_body(body_path);
  std::ostringstream csv;
  csv << "# ";
  for (ag::Index i = 0; i < spec.dim; ++i) csv << "x" << (i + 1) << ",";
  csv << "label\n";

  ag::SplitMix64 rng(seed);
  const long box = 8;
  const auto draw = [&] {
    ag::RatVector x(spec.dim);
    for (ag::Index i = 0; i < spec.dim; ++i)
      x[i] = ag::Rational(rng.uniform_int(-4 * box, 4 * box), 4);
    return x;
  };

  if (spec.analytic()) {
    const ag::AnalyticBody* body = std::get<const ag::AnalyticBody*>(spec.payload);
    csv.precision(12);
    for (int k = 0; k < count; ++k) {
      ag::VectorXd x = ag::to_double_vector(draw());
      ag::GaugeBracket g = ag::gauge_bisect(*body, x, tol);
      std::string label;
      if (g.hi <= tol) label = "theta";
      else if (g.hi < 1.0 - tol) label = "interior";
      else if (g.lo <= 1.0 + tol && g.hi >= 1.0 - tol) label = "boundary";
      else { x /= g.hi; label = "boundary"; }
      for (ag::Index i = 0; i < spec.dim; ++i) csv << x[i] << ",";
      csv << label << "\n";
    }
  } else {
    ag::AsymNorm n = norm_from(spec);
    for (int k = 0; k < count; ++k) {
      ag::RatVector x = draw();
      ag::Rational g = n.gauge(x);
      std::string label;
      if (g.is_zero()) label = "theta";
      else if (g < ag::Rational(1)) label = "interior";
      else if (g == ag::Rational(1)) label = "boundary";
      else { x /= g; label = "boundary"; }  // exact radial projection
      for (ag::Index i = 0; i < spec.dim; ++i) csv << x[i].str() << ",";
      csv << label << "\n";
    }
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out);
    if (!f) throw ag::ParseError("cannot write " + out);
    f << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in asymmetric normed spaces"};
  app.require_subcommand(1);

  std::string body_path, point, out, mutate, second_path, scenario_name;
  double tol = 1e-9;
  int cases = 50, scenario_n = 50, count = 200;
  std::vector<int> dims{2};
  std::uint64_t seed = default_seed();

  auto* gauge = app.add_subcommand("gauge", "evaluate the gauge at a point");
  gauge->add_option("body", body_path, "body JSON file")->required();
  gauge->add_option("--point", point, "comma-separated coordinates")->required();
  gauge->add_option("--tol", tol, "bisection tolerance (analytic bodies)");

  auto* analyze = app.add_subcommand("analyze", "full norm report");
  analyze->add_option("body", body_path)->required();
  analyze->add_option("--out", out, "write the JSON report here");

  auto* equiv = app.add_subcommand("equiv", "equivalence certificate");
  equiv->add_option("first", body_path)->required();
  equiv->add_option("second", second_path)->required();
  equiv->add_option("--out", out);

  auto* laws = app.add_subcommand("laws", "run the law suite");
  laws->add_option("--dim", dims, "dimensions to run (repeatable)");
  laws->add_option("--cases", cases, "cases per law");
  laws->add_option("--seed", seed, "base seed (env ASYMGAUGE_SEED overrides the default)");
  laws->add_option("--mutate", mutate, "mutation hook (l3-sym-scale)");
  laws->add_option("--out", out);

  auto* scenario = app.add_subcommand("scenario", "run a named scenario");
  scenario->add_option("name", scenario_name, "hyperbola | cylinder | parabola")
      ->required();
  scenario->add_option("--n", scenario_n, "sequence length (cylinder)");
  scenario->add_option("--out", out);

  auto* sample = app.add_subcommand("sample", "emit labeled CSV points");
  sample->add_option("body", body_path)->required();
  sample->add_option("--count", count);
  sample->add_option("--seed", seed);
  sample->add_option("--tol", tol);
  sample->add_option("--out", out, "CSV path (stdout if absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gauge->parsed()) return cmd_gauge(body_path, point, tol);
    if (analyze->parsed()) return cmd_analyze(body_path, out);
    if (equiv->parsed()) return cmd_equiv(body_path, second_path, out);
    if (laws->parsed()) return cmd_laws(dims, cases, seed, mutate, out);
    if (scenario->parsed()) return cmd_scenario(scenario_name, scenario_n, out);
    if (sample->parsed()) return cmd_sample(body_path, count, seed, tol, out);
  } catch (const ag::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ag::BallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.report.zero_interior)
      std::cerr << "  the origin is not interior to the ball\n";
    if (!e.report.pointed_theta)
      std::cerr << "  the recession cone contains a line\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
