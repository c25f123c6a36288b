// Acceptance suite: ten integration criteria, one verdict line each.
// Exact criteria run in rational arithmetic with zero tolerance; the
// analytic scenarios use the stated 1e-9 tolerance.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "asymgauge/laws.hpp"
#include "asymgauge/linear_solve.hpp"
#include "asymgauge/rng.hpp"
#include "asymgauge/scenarios.hpp"
#include "asymgauge/serialize.hpp"

using namespace asymgauge;

namespace {

constexpr double kTol = 1e-9;

struct Suite {
  int failures = 0;
  void verdict(int id, const std::string& name, bool pass,
               const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": "
              << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
  }
};

RatMatrix mat(Index m, Index n, std::initializer_list<long> e) {
  RatMatrix A(m, n);
  auto it = e.begin();
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = Rational(*it++);
  return A;
}

SpaceGenConfig config_for_seed(std::uint64_t seed) {
  SpaceGenConfig cfg;
  cfg.dim = 2 + static_cast<int>((seed - 1) % 3);  // dims 2..4 round-robin
  cfg.n_vertices = 3 + static_cast<int>(seed % 6);
  cfg.n_rays = static_cast<int>(seed % 4);
  cfg.seed = seed;
  return cfg;
}

RatVector random_point(SplitMix64& rng, Index dim) {
  RatVector x(dim);
  for (Index i = 0; i < dim; ++i)
    x[i] = Rational(rng.uniform_int(-12, 12), rng.uniform_int(1, 4));
  return x;
}

bool cones_equal(const PCone& a, const PCone& b) {
  for (const auto& g : a.gens)
    if (!b.contains(g)) return false;
  for (const auto& g : b.gens)
    if (!a.contains(g)) return false;
  return a.lines.empty() && b.lines.empty();
}

// --- criterion 1 -------------------------------------------------------------

bool lattice_exactness(std::string& detail) {
  AsymNorm lat = AsymNorm::from_hrep(
      HPoly(2, mat(2, 2, {1, 0, 0, 1}), rat_vector({1, 1})));
  bool ok = lat.gauge(rat_vector({3, -5})) == Rational(3);
  PCone quadrant = cone_from_generators(2, {rat_vector({-1, 0}),
                                            rat_vector({0, -1})});
  ok = ok && cones_equal(lat.theta(), quadrant);
  BoundednessCert rb = right_bounded(lat);
  ok = ok && rb.r_star == Rational(1) && rb.one_bounded;
  detail = "gauge(3,-5) = " + lat.gauge(rat_vector({3, -5})).str() +
           ", r* = " + rb.r_star.str();
  return ok;
}

// --- criteria 2, 3, 5 over the same 100 generated norms ----------------------

struct GeneratedNorm {
  std::uint64_t seed;
  AsymNorm n;
  AsymNorm companion;
};

std::vector<GeneratedNorm> generate_hundred() {
  std::vector<GeneratedNorm> out;
  out.reserve(100);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    AsymNorm n = random_space(config_for_seed(seed));
    AsymNorm m = canonical_qp(n);
    out.push_back({seed, std::move(n), std::move(m)});
  }
  return out;
}

bool companion_properties(const std::vector<GeneratedNorm>& norms,
                          std::string& detail) {
  for (const auto& g : norms) {
    const AsymNorm& n = g.n;
    const AsymNorm& m = g.companion;
    SplitMix64 points_rng(mix_seed(g.seed, 17));
    for (int k = 0; k < 20; ++k) {
      RatVector x = random_point(points_rng, n.dim());
      const Rational via_ball = m.gauge(x);
      if (via_ball < n.gauge(x)) {  // p1
        detail = "p1 at seed " + std::to_string(g.seed);
        return false;
      }
      if (via_ball != qp_gauge_pointwise(n, x)) {  // p3 / evaluator agreement
        detail = "p3 at seed " + std::to_string(g.seed);
        return false;
      }
    }
    if (!subset_test(m.ball_vrep(), n.ball_hrep()).holds) {  // p2
      detail = "p2 at seed " + std::to_string(g.seed);
      return false;
    }
    if (!cones_equal(m.theta(), n.theta())) {  // p5
      detail = "p5 at seed " + std::to_string(g.seed);
      return false;
    }
    if (!subset_test(m.sym_ball_vrep(), n.sym_ball_hrep()).holds ||
        !subset_test(n.sym_ball_vrep(), m.sym_ball_hrep()).holds) {  // p6
      detail = "p6 at seed " + std::to_string(g.seed);
      return false;
    }
    AsymNorm m2 = canonical_qp(m);
    if (!right_bounded(m, m2).one_bounded || !same_ball(m2, m)) {  // p7
      detail = "p7 at seed " + std::to_string(g.seed);
      return false;
    }
    if (same_ball(m, n) != right_bounded(n, m).one_bounded) {  // p8
      detail = "p8 at seed " + std::to_string(g.seed);
      return false;
    }
  }
  detail = "100 norms, 20 points each";
  return true;
}

bool companion_equivalence(const std::vector<GeneratedNorm>& norms,
                           std::string& detail) {
  for (const auto& g : norms) {
    EquivCert cert = equivalent(g.n, g.companion);
    if (!cert.equivalent || !(cert.kappa > Rational(0)) ||
        !(cert.lambda > Rational(0))) {
      detail = "no constants at seed " + std::to_string(g.seed);
      return false;
    }
    if (!strongly_compact(g.companion.ball_vrep(), g.n).strongly_compact) {
      detail = "companion ball not strongly compact at seed " +
               std::to_string(g.seed);
      return false;
    }
  }
  detail = "100 equivalences with verified containments";
  return true;
}

bool ball_geometry(const std::vector<GeneratedNorm>& norms,
                   std::string& detail) {
  int one_bounded_checked = 0;
  for (const auto& g : norms) {
    if (!ball_decomposition(g.n).check) {
      detail = "decomposition at seed " + std::to_string(g.seed);
      return false;
    }
    // Every companion is 1-bounded; its extreme points sit in the sym ball.
    ExtremeSet es = extreme_set(g.companion.ball_vrep(), g.companion);
    if (!es.pointed) {
      detail = "non-pointed companion at seed " + std::to_string(g.seed);
      return false;
    }
    ++one_bounded_checked;
    for (const auto& p : es.points)
      if (!membership(g.companion.sym_ball_hrep(), p)) {
        detail = "extreme point escapes sym ball, seed " +
                 std::to_string(g.seed);
        return false;
      }
  }
  detail = "100 decompositions, " + std::to_string(one_bounded_checked) +
           " 1-bounded extreme inclusions";
  return true;
}

// --- criterion 4 -------------------------------------------------------------

bool theta_equality_theorem(std::string& detail) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    SpaceGenConfig cfg = config_for_seed(seed);
    auto [a, b] = random_space_pair(cfg, /*share_rays=*/true);
    if (!equivalent(a, b).equivalent) {
      detail = "shared-ray pair failed at seed " + std::to_string(seed);
      return false;
    }
  }
  for (std::uint64_t seed = 51; seed <= 100; ++seed) {
    SpaceGenConfig cfg = config_for_seed(seed);
    auto [a, b] = random_space_pair(cfg, /*share_rays=*/false);
    EquivCert cert = equivalent(a, b);
    if (cert.equivalent) {
      detail = "differing-ray pair reported equivalent at seed " +
               std::to_string(seed);
      return false;
    }
    const bool in_a = a.theta().contains(cert.direction);
    const bool in_b = b.theta().contains(cert.direction);
    if (in_a == in_b) {
      detail = "witness not one-sided at seed " + std::to_string(seed);
      return false;
    }
  }
  detail = "50 shared + 50 differing pairs";
  return true;
}

// --- criterion 6 -------------------------------------------------------------

bool hyperbola_criterion(std::string& detail) {
  VectorXd probe(2);
  probe << 0.0, 1.5;
  GaugeBracket g = gauge_bisect(hyperbola_body(), probe, kTol);
  if (!(g.lo >= 1.0 - kTol && g.hi <= 1.0 + kTol)) {
    detail = "gauge at (0, 3/2) out of bracket";
    return false;
  }
  ScenarioReport rep = hyperbola_scenario();
  if (!rep.pass()) {
    for (const auto& c : rep.checks)
      if (!c.informational && !c.pass) detail = c.description;
    return false;
  }
  detail = "bisection bracket and scenario checks at 1e-9";
  return true;
}

// --- criterion 7 -------------------------------------------------------------

bool cylinder_criterion(std::string& detail) {
  const AnalyticBody& body = cylinder_body();
  VectorXd pole(3), cap(3);
  pole << 0, 0, 1;
  cap << 1, 0, 0;
  double previous = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const VectorXd u = cylinder_u(n);
    const double qs =
        std::max(body.exact_gauge(u), body.exact_gauge(VectorXd(-u)));
    if (std::abs(qs - n) > kTol) {
      detail = "sym gauge at n = " + std::to_string(n);
      return false;
    }
    const double d_pole = body.exact_gauge(u - pole);
    if (n >= 6 && !(d_pole < previous)) {
      detail = "pole distance not decreasing at n = " + std::to_string(n);
      return false;
    }
    previous = d_pole;
    if (n == 50 && !(d_pole < 0.05)) {
      detail = "pole distance at n = 50 is " + std::to_string(d_pole);
      return false;
    }
    if (std::abs(body.exact_gauge(u - cap) - 1.0) > kTol) {
      detail = "cap distance differs from 1 at n = " + std::to_string(n);
      return false;
    }
  }
  if (cylinder_refute_bound(10.0) != 11 || cylinder_refute_bound(100.0) != 101) {
    detail = "refutation indices";
    return false;
  }
  // Exact extremality of all fifty sequence points in the inner model.
  VPoly model = cylinder_inner_model(50);
  auto reduced = irredundant_vrep(model);
  auto* irr = std::get_if<IrredundantVrep>(&reduced);
  if (!irr) {
    detail = "inner model not pointed";
    return false;
  }
  for (int n = 1; n <= 50; ++n) {
    const RatVector& want = model.points[static_cast<std::size_t>(3 + n)];
    bool kept = false;
    for (const auto& p : irr->reduced.points)
      if (p == want) kept = true;
    if (!kept) {
      detail = "u_" + std::to_string(n) + " lost extremality";
      return false;
    }
  }
  ScenarioReport rep = cylinder_scenario(50);
  if (!rep.pass()) {
    for (const auto& c : rep.checks)
      if (!c.informational && !c.pass) detail = c.description;
    return false;
  }
  detail = "N = 50, refutations 11 and 101, extremality exact";
  return true;
}

// --- criterion 8 -------------------------------------------------------------

bool parabola_criterion(std::string& detail) {
  AsymNorm lat = AsymNorm::from_hrep(
      HPoly(2, mat(2, 2, {1, 0, 0, 1}), rat_vector({1, 1})));
  for (long k = 1; k <= 20; ++k) {
    RatVector p(2);
    p << Rational(-k), Rational(-k * k);
    if (lat.sym_gauge(p) != Rational(k * k)) {
      detail = "sym gauge at k = " + std::to_string(k);
      return false;
    }
  }
  ScenarioReport rep = parabola_scenario();
  if (!rep.pass()) {
    for (const auto& c : rep.checks)
      if (!c.informational && !c.pass) detail = c.description;
    return false;
  }
  detail = "1000 membership samples, 20 exact boundary values";
  return true;
}

// --- criterion 9 -------------------------------------------------------------

bool law_suite_criterion(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  for (int dim : {2, 3, 4}) {
    SpaceGenConfig cfg;
    cfg.dim = dim;
    cfg.seed = 1;
    LawReport report = run_laws(cfg, 50);
    if (!report.pass()) {
      for (const auto& law : report.laws)
        if (!law.failures.empty())
          detail = law.id + std::string(" dim ") + std::to_string(dim) +
                   ": " + law.failures[0].witness;
      return false;
    }
  }
  // The harness must notice violations: the built-in mutation makes the
  // sandwich law fail on every case.
  SpaceGenConfig cfg;
  cfg.dim = 2;
  cfg.seed = 1;
  LawReport mutated = run_laws(cfg, 10, MutationHook::ScaleSymBallInSandwich);
  bool l3_failed = false;
  for (const auto& law : mutated.laws) {
    if (law.id == "L3")
      l3_failed = law.failures.size() == 10;
    else if (!law.failures.empty()) {
      detail = "mutation leaked into " + law.id;
      return false;
    }
  }
  if (!l3_failed) {
    detail = "mutation hook not detected by L3";
    return false;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::ostringstream os;
  os << "dims 2-4 x 50 cases in " << static_cast<int>(secs)
     << "s, mutation detected";
  detail = os.str();
  return secs <= 300.0;
}

// --- criterion 10 ------------------------------------------------------------

std::optional<Rational> vertex_enumeration_optimum(const LPProblem& p) {
  const Index m = p.rows(), n = p.cols();
  std::optional<Rational> best;
  auto feasible = [&](const RatVector& x) {
    for (Index i = 0; i < m; ++i) {
      const Rational lhs = p.A.row(i).dot(x.transpose());
      if (p.sense[static_cast<std::size_t>(i)] == Sense::LE && lhs > p.b[i])
        return false;
      if (p.sense[static_cast<std::size_t>(i)] == Sense::GE && lhs < p.b[i])
        return false;
      if (p.sense[static_cast<std::size_t>(i)] == Sense::EQ && lhs != p.b[i])
        return false;
    }
    return true;
  };
  std::vector<Index> comb;
  std::function<void(Index)> rec = [&](Index start) {
    if (static_cast<Index>(comb.size()) == n) {
      RatMatrix S(n, n);
      RatVector rhs(n);
      for (Index k = 0; k < n; ++k) {
        S.row(k) = p.A.row(comb[static_cast<std::size_t>(k)]);
        rhs[k] = p.b[comb[static_cast<std::size_t>(k)]];
      }
      if (matrix_rank<Rational>(S) != n) return;
      auto sol = solve_linear<Rational>(S, rhs);
      if (auto* ok = std::get_if<LinearSolution<Rational>>(&sol))
        if (feasible(ok->x)) {
          const Rational val = p.c.dot(ok->x);
          if (!best || val < *best) best = val;
        }
      return;
    }
    for (Index i = start; i < m; ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  return best;
}

bool kernel_oracles(std::string& detail) {
  SplitMix64 rng(424242);
  int matched = 0;
  while (matched < 200) {
    const Index n = static_cast<Index>(rng.uniform_int(1, 3));
    const Index extra = static_cast<Index>(rng.uniform_int(0, 3));
    const Index m = 2 * n + extra;
    LPProblem p;
    p.c = RatVector::Constant(n, Rational(0));
    p.A = RatMatrix::Constant(m, n, Rational(0));
    p.b = RatVector::Constant(m, Rational(0));
    p.sense.assign(static_cast<std::size_t>(m), Sense::LE);
    p.lower = free_bounds(n);
    for (Index j = 0; j < n; ++j) {
      p.A(2 * j, j) = Rational(1);
      p.b[2 * j] = Rational(rng.uniform_int(1, 5));
      p.A(2 * j + 1, j) = Rational(-1);
      p.b[2 * j + 1] = Rational(rng.uniform_int(1, 5));
    }
    for (Index i = 2 * n; i < m; ++i) {
      for (Index j = 0; j < n; ++j)
        p.A(i, j) = Rational(rng.uniform_int(-3, 3));
      if (p.A.row(i).cwiseAbs().sum().is_zero()) p.A(i, 0) = Rational(1);
      p.b[i] = Rational(rng.uniform_int(0, 5));
    }
    for (Index j = 0; j < n; ++j) p.c[j] = Rational(rng.uniform_int(-4, 4));

    auto expected = vertex_enumeration_optimum(p);
    LPResult r = lp_solve(p);
    if (!lp_verify(p, r)) {
      detail = "certificate recheck failed";
      return false;
    }
    if (!expected) {
      if (r.status != LPStatus::Infeasible) {
        detail = "oracle says infeasible, solver disagrees";
        return false;
      }
      continue;
    }
    if (r.status != LPStatus::Optimal || r.objective != *expected) {
      detail = "optimum mismatch";
      return false;
    }
    ++matched;
  }

  // Dual-representation round-trips verified by mutual containment.
  SplitMix64 poly_rng(5150);
  for (int round = 0; round < 40; ++round) {
    const Index dim = static_cast<Index>(poly_rng.uniform_int(2, 4));
    std::vector<RatVector> pts, rays;
    const int np = static_cast<int>(poly_rng.uniform_int(1, 5));
    const int nr = static_cast<int>(poly_rng.uniform_int(0, 2));
    for (int k = 0; k < np; ++k) {
      RatVector p(dim);
      for (Index i = 0; i < dim; ++i)
        p[i] = Rational(poly_rng.uniform_int(-4, 4));
      pts.push_back(p);
    }
    for (int k = 0; k < nr; ++k) {
      RatVector r(dim);
      bool zero = true;
      for (Index i = 0; i < dim; ++i) {
        r[i] = Rational(poly_rng.uniform_int(-3, 3));
        zero = zero && r[i].is_zero();
      }
      if (zero) r[0] = Rational(1);
      rays.push_back(r);
    }
    VPoly v(dim, pts, rays);
    HPoly h = to_hrep(v);
    VPoly v2 = to_vrep(h);
    if (!set_equal(v, v2) || !set_equal(to_hrep(v2), h)) {
      detail = "round trip failed at round " + std::to_string(round);
      return false;
    }
  }
  detail = "200 LP matches, 40 round-trips";
  return true;
}

}  // namespace

int main() {
  Suite suite;
  std::string detail;

  detail.clear();
  suite.verdict(1, "lattice-norm exactness", lattice_exactness(detail), detail);

  std::vector<GeneratedNorm> norms = generate_hundred();
  detail.clear();
  suite.verdict(2, "canonical companion properties (p1-p8)",
                companion_properties(norms, detail), detail);
  detail.clear();
  suite.verdict(3, "equivalence with the companion and strong compactness",
                companion_equivalence(norms, detail), detail);
  detail.clear();
  suite.verdict(4, "null-cone equality theorem on 100 pairs",
                theta_equality_theorem(detail), detail);
  detail.clear();
  suite.verdict(5, "ball geometry decomposition", ball_geometry(norms, detail),
                detail);
  detail.clear();
  suite.verdict(6, "hyperbola scenario", hyperbola_criterion(detail), detail);
  detail.clear();
  suite.verdict(7, "cylinder scenario at N = 50", cylinder_criterion(detail),
                detail);
  detail.clear();
  suite.verdict(8, "parabola scenario", parabola_criterion(detail), detail);
  detail.clear();
  suite.verdict(9, "law suite dims 2-4", law_suite_criterion(detail), detail);
  detail.clear();
  suite.verdict(10, "kernel oracles", kernel_oracles(detail), detail);

  if (suite.failures == 0) {
    std::cout << "acceptance: all 10 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << suite.failures << " criteria failed"
            << std::endl;
  return 1;
}
