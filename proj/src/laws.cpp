#include "asymgauge/laws.hpp"

#include <sstream>

#include "asymgauge/rng.hpp"

namespace asymgauge {

namespace {

std::string vec_str(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

RatVector random_integer_vector(SplitMix64& rng, Index dim, long bound) {
  RatVector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = Rational(rng.uniform_int(-bound, bound));
  return v;
}

RatVector random_rational_point(SplitMix64& rng, Index dim, long bound) {
  RatVector v(dim);
  for (Index i = 0; i < dim; ++i)
    v[i] = Rational(rng.uniform_int(-3 * bound, 3 * bound),
                    rng.uniform_int(1, 4));
  return v;
}

bool is_zero_vec(const RatVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

std::vector<RatVector> draw_pointed_rays(SplitMix64& rng, Index dim,
                                         long bound, int n_rays,
                                         std::uint64_t seed) {
  std::vector<RatVector> rays;
  if (n_rays == 0) return rays;
  RatVector halfspace;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 64) throw GenerationError("no halfspace normal", seed);
    halfspace = random_integer_vector(rng, dim, bound);
    if (!is_zero_vec(halfspace)) break;
  }
  while (static_cast<int>(rays.size()) < n_rays) {
    int attempt = 0;
    for (;;) {
      if (++attempt > 64) throw GenerationError("no ray in halfspace", seed);
      RatVector r = random_integer_vector(rng, dim, bound);
      if (is_zero_vec(r)) continue;
      if (halfspace.dot(r) < Rational(0)) {
        rays.push_back(primitive(r));
        break;
      }
    }
  }
  return rays;
}

VPoly ball_from_parts(Index dim, long bound,
                      const std::vector<RatVector>& vertices,
                      const std::vector<RatVector>& rays) {
  std::vector<RatVector> points = vertices;
  for (Index i = 0; i < dim; ++i) {
    RatVector e = RatVector::Constant(dim, Rational(0));
    e[i] = Rational(1, bound);
    points.push_back(e);
    points.push_back(RatVector(-e));
  }
  return VPoly(dim, points, rays);
}

AsymNorm space_from(SplitMix64& rng, const SpaceGenConfig& cfg,
                    const std::vector<RatVector>& rays) {
  std::vector<RatVector> vertices;
  for (int k = 0; k < cfg.n_vertices; ++k)
    vertices.push_back(random_integer_vector(rng, cfg.dim, cfg.coordinate_bound));
  return AsymNorm::from_vrep(
      ball_from_parts(cfg.dim, cfg.coordinate_bound, vertices, rays));
}

// Derives per-case generation parameters from the case rng, then builds a
// valid space.  Shared-ray pairs reuse the exact ray list.
SpaceGenConfig randomized(SplitMix64& rng, const SpaceGenConfig& base) {
  SpaceGenConfig cfg = base;
  cfg.n_vertices = static_cast<int>(rng.uniform_int(3, 8));
  cfg.n_rays = static_cast<int>(rng.uniform_int(0, 3));
  return cfg;
}

std::pair<AsymNorm, AsymNorm> pair_shared(SplitMix64& rng,
                                          const SpaceGenConfig& cfg) {
  auto rays = draw_pointed_rays(rng, cfg.dim, cfg.coordinate_bound,
                                cfg.n_rays, cfg.seed);
  AsymNorm a = space_from(rng, cfg, rays);
  AsymNorm b = space_from(rng, cfg, rays);
  return {std::move(a), std::move(b)};
}

std::pair<AsymNorm, AsymNorm> pair_differing(SplitMix64& rng,
                                             const SpaceGenConfig& cfg) {
  auto rays = draw_pointed_rays(rng, cfg.dim, cfg.coordinate_bound,
                                cfg.n_rays, cfg.seed);
  AsymNorm a = space_from(rng, cfg, rays);
  // Extend with a ray outside theta(a); redraw until genuinely new while
  // keeping the extended cone pointed.
  for (int attempt = 0;; ++attempt) {
    if (attempt > 64) throw GenerationError("no differing ray", cfg.seed);
    auto extended =
        draw_pointed_rays(rng, cfg.dim, cfg.coordinate_bound, 1, cfg.seed);
    if (a.theta().contains(extended[0])) continue;
    auto all = rays;
    all.push_back(extended[0]);
    // Pointedness of the extended cone is not automatic; probe it.
    PCone c = cone_from_generators(cfg.dim, all);
    if (!c.pointed()) continue;
    AsymNorm b = space_from(rng, cfg, all);
    return {std::move(a), std::move(b)};
  }
}

struct CaseContext {
  SplitMix64 rng;
  SpaceGenConfig cfg;
  std::uint64_t seed;

  CaseContext(std::uint64_t case_seed, const SpaceGenConfig& base)
      : rng(case_seed), cfg(randomized(rng, base)), seed(case_seed) {
    cfg.seed = case_seed;
  }

  AsymNorm space() {
    return space_from(rng, cfg, draw_pointed_rays(rng, cfg.dim,
                                                  cfg.coordinate_bound,
                                                  cfg.n_rays, seed));
  }
  std::pair<AsymNorm, AsymNorm> shared_ray_pair() { return pair_shared(rng, cfg); }
  std::pair<AsymNorm, AsymNorm> differing_ray_pair() {
    return pair_differing(rng, cfg);
  }
  RatVector point() {
    return random_rational_point(rng, cfg.dim, cfg.coordinate_bound);
  }
  Rational nonneg_scalar() {
    return Rational(rng.uniform_int(0, 10), rng.uniform_int(1, 4));
  }
};

bool cones_set_equal(const PCone& a, const PCone& b) {
  for (const auto& g : a.gens)
    if (!b.contains(g)) return false;
  for (const auto& g : b.gens)
    if (!a.contains(g)) return false;
  return a.lines.empty() == b.lines.empty();
}

std::optional<std::string> fail(const std::string& what, const RatVector& w) {
  return what + " at " + vec_str(w);
}

// L1: positive homogeneity, subadditivity, and separation of the gauge.
std::optional<std::string> law_axioms(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  for (int k = 0; k < 3; ++k) {
    RatVector x = ctx.point(), y = ctx.point();
    Rational a = ctx.nonneg_scalar();
    if (n.gauge(RatVector(a * x)) != a * n.gauge(x))
      return fail("homogeneity", x);
    if (n.gauge(RatVector(x + y)) > n.gauge(x) + n.gauge(y))
      return fail("subadditivity", x);
  }
  for (const auto& g : n.theta().gens) {
    if (!n.gauge(g).is_zero()) return fail("theta generator gauge", g);
    if (n.gauge(RatVector(-g)).is_zero()) return fail("separation", g);
  }
  return std::nullopt;
}

// L2: adding null-cone elements never increases the gauge.
std::optional<std::string> law_theta_absorption(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  for (int k = 0; k < 3; ++k) {
    RatVector x = ctx.point();
    for (const auto& z : n.theta().gens)
      for (long lam : {1L, 10L})
        if (n.gauge(RatVector(x + Rational(lam) * z)) > n.gauge(x))
          return fail("absorption", x);
  }
  return std::nullopt;
}

// L3: sym ball + theta sits inside the ball, with equality iff 1-bounded.
std::optional<std::string> law_sandwich(CaseContext& ctx, MutationHook hook) {
  AsymNorm n = ctx.space();
  VPoly sym = n.sym_ball_vrep();
  if (hook == MutationHook::ScaleSymBallInSandwich)
    sym = scale(sym, Rational(2));
  VPoly sum = minkowski_sum(sym, n.theta());
  SubsetCertificate inner = subset_test(sum, n.ball_hrep());
  if (!inner.holds)
    return fail("sym + theta escapes the ball",
                inner.witness ? inner.witness->generator
                              : RatVector::Constant(n.dim(), Rational(0)));
  AsymNorm m = canonical_qp(n);  // its ball is exactly sym + theta
  const bool equality = subset_test(n.ball_vrep(), m.ball_hrep()).holds;
  if (equality != right_bounded(n, m).one_bounded)
    return std::optional<std::string>("equality vs 1-boundedness mismatch");
  return std::nullopt;
}

// L4: finite equivalence constants force equal null cones.
std::optional<std::string> law_equivalence_theta(CaseContext& ctx) {
  auto [a, b] = ctx.shared_ray_pair();
  EquivCert cert = equivalent(a, b);
  if (!cert.equivalent)
    return std::optional<std::string>("shared-ray pair not equivalent");
  if (!cones_set_equal(a.theta(), b.theta()))
    return std::optional<std::string>("equivalent norms with unequal cones");
  for (int k = 0; k < 5; ++k) {
    RatVector x = ctx.point();
    const Rational qa = a.gauge(x), qb = b.gauge(x);
    if (!(cert.kappa * qa <= qb && qb <= cert.lambda * qa))
      return fail("pointwise constants", x);
  }
  return std::nullopt;
}

// L5: the canonical companion satisfies p1-p3 and p5-p8.
std::optional<std::string> law_companion(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  AsymNorm m = canonical_qp(n);
  for (int k = 0; k < 5; ++k) {
    RatVector x = ctx.point();
    if (m.gauge(x) < n.gauge(x)) return fail("p1 domination", x);
    if (m.gauge(x) != qp_gauge_pointwise(n, x)) return fail("p3 pointwise", x);
  }
  if (!subset_test(m.ball_vrep(), n.ball_hrep()).holds)
    return std::optional<std::string>("p2 ball containment");
  if (!cones_set_equal(m.theta(), n.theta()))
    return std::optional<std::string>("p5 cone equality");
  if (!subset_test(m.sym_ball_vrep(), n.sym_ball_hrep()).holds ||
      !subset_test(n.sym_ball_vrep(), m.sym_ball_hrep()).holds)
    return std::optional<std::string>("p6 sym ball equality");
  AsymNorm m2 = canonical_qp(m);
  if (!right_bounded(m, m2).one_bounded)
    return std::optional<std::string>("p7 1-boundedness");
  if (!same_ball(m2, m)) return std::optional<std::string>("p7 idempotence");
  if (same_ball(m, n) != right_bounded(n, m).one_bounded)
    return std::optional<std::string>("p8 equality iff 1-bounded");
  return std::nullopt;
}

// L6: every polyhedral norm is equivalent to its companion, whose ball is
// strongly compact for the original norm.
std::optional<std::string> law_companion_equivalence(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  AsymNorm m = canonical_qp(n);
  EquivCert cert = equivalent(n, m);
  if (!cert.equivalent)
    return std::optional<std::string>("companion not equivalent");
  if (!(cert.kappa > Rational(0) && cert.lambda > Rational(0)))
    return std::optional<std::string>("non-positive constants");
  if (!strongly_compact(m.ball_vrep(), n).strongly_compact)
    return std::optional<std::string>("companion ball not strongly compact");
  return std::nullopt;
}

// L7: 1-bounded norms have strongly compact balls.
std::optional<std::string> law_one_bounded_compact(CaseContext& ctx) {
  AsymNorm m = canonical_qp(ctx.space());
  StrongCompactness sc = strongly_compact(m.ball_vrep(), m);
  if (!sc.strongly_compact)
    return std::optional<std::string>("1-bounded ball not strongly compact");
  if (!sc.sandwich.holds) return std::optional<std::string>("sandwich recheck");
  return std::nullopt;
}

// L8: ball = conv(extreme points) + theta.
std::optional<std::string> law_ball_geometry(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  BallDecomposition dec = ball_decomposition(n);
  if (!dec.check) return std::optional<std::string>("decomposition mismatch");
  return std::nullopt;
}

// L9: finitely many extreme points force right boundedness.
std::optional<std::string> law_extreme_bounded(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  ExtremeSet es = extreme_set(n.ball_vrep(), n);
  if (!es.pointed || es.points.empty())
    return std::optional<std::string>("extreme set degenerate");
  BoundednessCert rb = right_bounded(n);
  if (!(rb.r_star > Rational(0)))
    return std::optional<std::string>("vanishing right-boundedness constant");
  return std::nullopt;
}

// L10: for 1-bounded norms the extreme points sit inside the sym ball.
std::optional<std::string> law_extreme_in_sym(CaseContext& ctx) {
  AsymNorm m = canonical_qp(ctx.space());
  ExtremeSet es = extreme_set(m.ball_vrep(), m);
  for (const auto& p : es.points)
    if (!membership(m.sym_ball_hrep(), p)) return fail("extreme point", p);
  return std::nullopt;
}

// L11: equal null cones give equivalence; differing cones refute it with a
// one-sided direction.
std::optional<std::string> law_theta_equality_theorem(CaseContext& ctx) {
  {
    auto [a, b] = ctx.shared_ray_pair();
    if (!equivalent(a, b).equivalent)
      return std::optional<std::string>("shared cones not equivalent");
  }
  auto [a, b] = ctx.differing_ray_pair();
  EquivCert cert = equivalent(a, b);
  if (cert.equivalent)
    return std::optional<std::string>("differing cones reported equivalent");
  const bool in_a = a.theta().contains(cert.direction);
  const bool in_b = b.theta().contains(cert.direction);
  if (in_a == in_b) return fail("direction not one-sided", cert.direction);
  return std::nullopt;
}

// L12: Caratheodory witnesses with at most dim+1 weights; separators for
// outside points.
std::optional<std::string> law_caratheodory(CaseContext& ctx) {
  const Index dim = ctx.cfg.dim;
  std::vector<RatVector> points;
  const int count = static_cast<int>(dim) + 3;
  for (int k = 0; k < count; ++k)
    points.push_back(random_integer_vector(ctx.rng, dim,
                                           ctx.cfg.coordinate_bound));
  // A random convex combination must come back with a small certificate.
  RatVector x = RatVector::Constant(dim, Rational(0));
  Rational total(0);
  std::vector<Rational> w;
  for (int k = 0; k < count; ++k) {
    Rational wk(ctx.rng.uniform_int(0, 6));
    w.push_back(wk);
    total += wk;
  }
  if (total.is_zero()) w[0] = total = Rational(1);
  for (int k = 0; k < count; ++k)
    x += (w[static_cast<std::size_t>(k)] / total) *
         points[static_cast<std::size_t>(k)];
  auto inside = caratheodory_witness(points, x);
  auto* comb = std::get_if<ConvexCombination>(&inside);
  if (!comb) return fail("hull point rejected", x);
  if (static_cast<Index>(comb->weights.size()) > dim + 1)
    return std::optional<std::string>("certificate too long");
  RatVector back = RatVector::Constant(dim, Rational(0));
  Rational mass(0);
  for (const auto& [idx, weight] : comb->weights) {
    back += weight * points[static_cast<std::size_t>(idx)];
    mass += weight;
  }
  if (mass != Rational(1) || back != x) return fail("recombination", x);

  RatVector outside = RatVector::Constant(dim, Rational(0));
  outside[0] = Rational(10 * ctx.cfg.coordinate_bound + 1);
  auto sep = caratheodory_witness(points, outside);
  auto* not_in = std::get_if<NotInHull>(&sep);
  if (!not_in) return fail("far point accepted", outside);
  for (const auto& p : points)
    if (not_in->functional.dot(p) > not_in->threshold)
      return fail("separator invalid", p);
  if (not_in->functional.dot(outside) <= not_in->threshold)
    return fail("separator misses the point", outside);
  return std::nullopt;
}

// L13: gauge(ly - mx) <= l gauge(y - x) + |l - m| sym_gauge(x).
std::optional<std::string> law_scalar_continuity(CaseContext& ctx) {
  AsymNorm n = ctx.space();
  for (int k = 0; k < 4; ++k) {
    RatVector x = ctx.point(), y = ctx.point();
    Rational l = ctx.nonneg_scalar(), m = ctx.nonneg_scalar();
    const Rational lhs = n.gauge(RatVector(l * y - m * x));
    const Rational rhs =
        l * n.gauge(RatVector(y - x)) + (l - m).abs() * n.sym_gauge(x);
    if (lhs > rhs) return fail("scalar continuity", x);
  }
  return std::nullopt;
}

// L14: equivalent norms are right bounded together.
std::optional<std::string> law_equivalent_right_bounded(CaseContext& ctx) {
  auto [a, b] = ctx.shared_ray_pair();
  if (!equivalent(a, b).equivalent)
    return std::optional<std::string>("pair not equivalent");
  BoundednessCert ra = right_bounded(a), rb = right_bounded(b);
  if (!(ra.r_star > Rational(0)) || !(rb.r_star > Rational(0)))
    return std::optional<std::string>("right-boundedness constant vanished");
  if (!ra.containment.holds || !rb.containment.holds)
    return std::optional<std::string>("containment certificate failed");
  return std::nullopt;
}

struct LawEntry {
  const char* id;
  const char* name;
};

constexpr LawEntry kLaws[kLawCount] = {
    {"L1", "gauge axioms"},
    {"L2", "null-cone absorption"},
    {"L3", "sym + theta sandwich"},
    {"L4", "equivalence forces equal cones"},
    {"L5", "canonical companion properties"},
    {"L6", "equivalence with the companion"},
    {"L7", "1-bounded balls strongly compact"},
    {"L8", "ball equals extreme hull + cone"},
    {"L9", "bounded extreme set, right bounded"},
    {"L10", "extreme points inside sym ball"},
    {"L11", "equal cones iff equivalent"},
    {"L12", "Caratheodory certificates"},
    {"L13", "scalar continuity estimate"},
    {"L14", "equivalent norms bounded together"},
};

}  // namespace

const char* law_id(int index) { return kLaws[index].id; }
const char* law_name(int index) { return kLaws[index].name; }

namespace {
void check_config(const SpaceGenConfig& cfg) {
  if (cfg.dim < 2 || cfg.dim > 4)
    throw std::invalid_argument("random_space: dim in [2,4]");
  if (cfg.n_vertices < 3 || cfg.n_vertices > 8)
    throw std::invalid_argument("random_space: n_vertices in [3,8]");
  if (cfg.n_rays < 0 || cfg.n_rays > 3)
    throw std::invalid_argument("random_space: n_rays in [0,3]");
  if (cfg.coordinate_bound < 1)
    throw std::invalid_argument("random_space: coordinate_bound >= 1");
}
}  // namespace

AsymNorm random_space(const SpaceGenConfig& cfg) {
  check_config(cfg);
  SplitMix64 rng(cfg.seed);
  return space_from(rng, cfg, draw_pointed_rays(rng, cfg.dim,
                                                cfg.coordinate_bound,
                                                cfg.n_rays, cfg.seed));
}

std::pair<AsymNorm, AsymNorm> random_space_pair(const SpaceGenConfig& cfg,
                                                bool share_rays) {
  check_config(cfg);
  SplitMix64 rng(cfg.seed);
  return share_rays ? pair_shared(rng, cfg) : pair_differing(rng, cfg);
}

std::optional<std::string> run_law_case(int law_index, std::uint64_t case_seed,
                                        const SpaceGenConfig& cfg,
                                        MutationHook hook) {
  CaseContext ctx(case_seed, cfg);
  switch (law_index) {
    case 0: return law_axioms(ctx);
    case 1: return law_theta_absorption(ctx);
    case 2: return law_sandwich(ctx, hook);
    case 3: return law_equivalence_theta(ctx);
    case 4: return law_companion(ctx);
    case 5: return law_companion_equivalence(ctx);
    case 6: return law_one_bounded_compact(ctx);
    case 7: return law_ball_geometry(ctx);
    case 8: return law_extreme_bounded(ctx);
    case 9: return law_extreme_in_sym(ctx);
    case 10: return law_theta_equality_theorem(ctx);
    case 11: return law_caratheodory(ctx);
    case 12: return law_scalar_continuity(ctx);
    case 13: return law_equivalent_right_bounded(ctx);
    default: throw std::invalid_argument("run_law_case: unknown law");
  }
}

LawReport run_laws(const SpaceGenConfig& cfg, int cases, MutationHook hook) {
  if (cases < 1) throw std::invalid_argument("run_laws: cases >= 1");
  LawReport report;
  report.config = cfg;
  report.cases = cases;
  for (int law = 0; law < kLawCount; ++law) {
    LawResult result;
    result.id = kLaws[law].id;
    result.name = kLaws[law].name;
    result.cases = cases;
    for (int c = 0; c < cases; ++c) {
      const std::uint64_t case_seed =
          mix_seed(cfg.seed, static_cast<std::uint64_t>(law) * 100003ULL +
                                 static_cast<std::uint64_t>(c));
      if (auto witness = run_law_case(law, case_seed, cfg, hook))
        result.failures.push_back({case_seed, *witness});
    }
    report.laws.push_back(std::move(result));
  }
  return report;
}

}  // namespace asymgauge
