#include "asymgauge/norm.hpp"

#include <stdexcept>

namespace asymgauge {

AsymNorm AsymNorm::from_hrep(const HPoly& ball) {
  BallValidation v = validate_unit_ball(ball);
  if (!v.valid()) throw BallError(std::move(v));
  AsymNorm n;
  n.ball_h_ = ball;
  n.ball_v_ = to_vrep(ball);
  n.theta_ = recession_cone(ball);
  n.sym_h_ = intersect(ball, negate(ball));
  n.sym_v_ = to_vrep(n.sym_h_);
  return n;
}

AsymNorm AsymNorm::from_vrep(const VPoly& ball) {
  return from_hrep(to_hrep(ball));
}

Rational AsymNorm::gauge(const RatVector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("gauge: point width");
  const Index np = static_cast<Index>(ball_v_.points.size());
  const Index nr = static_cast<Index>(ball_v_.rays.size());
  LPProblem lp;
  lp.c = RatVector::Constant(np + nr, Rational(0));
  lp.c.head(np).setConstant(Rational(1));  // t = sum of point weights
  lp.A = RatMatrix(dim(), np + nr);
  for (Index j = 0; j < np; ++j)
    lp.A.col(j) = ball_v_.points[static_cast<std::size_t>(j)];
  for (Index j = 0; j < nr; ++j)
    lp.A.col(np + j) = ball_v_.rays[static_cast<std::size_t>(j)];
  lp.b = x;
  lp.sense.assign(static_cast<std::size_t>(dim()), Sense::EQ);
  lp.lower = nonneg_bounds(np + nr);
  LPResult r = lp_solve(lp);
  if (r.status != LPStatus::Optimal)
    throw std::logic_error("gauge: validated ball is not absorbing");
  return r.objective;
}

Rational AsymNorm::sym_gauge(const RatVector& x) const {
  return max(gauge(x), gauge(RatVector(-x)));
}

HPoly closed_ball(const AsymNorm& n, const Rational& r, const RatVector& x) {
  return translate(scale(n.ball_hrep(), r), x);
}

AsymNorm symmetrize(const AsymNorm& n) {
  return AsymNorm::from_hrep(n.sym_ball_hrep());
}

AsymNorm canonical_qp(const AsymNorm& n) {
  return AsymNorm::from_vrep(minkowski_sum(n.sym_ball_vrep(), n.theta()));
}

Rational qp_gauge_pointwise(const AsymNorm& n, const RatVector& x) {
  if (x.size() != n.dim()) throw DimensionMismatch("qp gauge: point width");
  // minimize t subject to  A_s (x - G mu) <= t b_s,  mu >= 0, t >= 0,
  // where A_s, b_s describe the symmetrized ball and G the theta generators.
  const HPoly& sym = n.sym_ball_hrep();
  const auto& gens = n.theta().gens;
  const Index ng = static_cast<Index>(gens.size());
  const Index m = sym.rows();
  LPProblem lp;
  lp.c = RatVector::Constant(ng + 1, Rational(0));
  lp.c[ng] = Rational(1);
  lp.A = RatMatrix(m, ng + 1);
  lp.b = RatVector(m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < ng; ++j)
      lp.A(i, j) = -sym.A.row(i).dot(gens[static_cast<std::size_t>(j)]);
    lp.A(i, ng) = -sym.b[i];
    lp.b[i] = -sym.A.row(i).dot(x.transpose());
  }
  lp.sense.assign(static_cast<std::size_t>(m), Sense::LE);
  lp.lower = nonneg_bounds(ng + 1);
  LPResult r = lp_solve(lp);
  if (r.status != LPStatus::Optimal)
    throw std::logic_error("qp gauge: infimum over theta did not resolve");
  return r.objective;
}

BoundednessCert right_bounded(const AsymNorm& n) {
  return right_bounded(n, canonical_qp(n));
}

bool same_ball(const AsymNorm& a, const AsymNorm& b) {
  return subset_test(a.ball_vrep(), b.ball_hrep()).holds &&
         subset_test(b.ball_vrep(), a.ball_hrep()).holds;
}

BoundednessCert right_bounded(const AsymNorm& n, const AsymNorm& companion) {
  BoundednessCert cert;
  Rational worst(0);
  for (const auto& v : n.ball_vrep().points) {
    Rational g = companion.gauge(v);
    if (g > worst) {
      worst = g;
      cert.worst_vertex = v;
    }
    cert.vertex_gauges.emplace_back(v, std::move(g));
  }
  if (worst.is_zero())
    throw std::logic_error("right_bounded: every vertex sits in theta");
  cert.r_star = worst.inv();
  cert.one_bounded = cert.r_star >= Rational(1);
  cert.containment = subset_test(scale(n.ball_vrep(), cert.r_star),
                                 companion.ball_hrep());
  if (!cert.containment.holds)
    throw std::logic_error("right_bounded: optimal constant failed recheck");
  return cert;
}

namespace {

// Both theta cones here are pointed, so generator containment decides
// subset exactly.
std::optional<RatVector> cone_difference_direction(const PCone& a,
                                                   const PCone& b) {
  for (const auto& g : a.gens)
    if (!b.contains(g)) return g;
  return std::nullopt;
}

}  // namespace

EquivCert equivalent(const AsymNorm& q, const AsymNorm& p) {
  if (q.dim() != p.dim()) throw DimensionMismatch("equivalent: dimensions");
  EquivCert cert;
  if (auto d = cone_difference_direction(q.theta(), p.theta())) {
    cert.equivalent = false;
    cert.direction = *d;
    return cert;
  }
  if (auto d = cone_difference_direction(p.theta(), q.theta())) {
    cert.equivalent = false;
    cert.direction = *d;
    return cert;
  }

  Rational lambda(0), sup_q_over_p(0);
  for (const auto& v : q.ball_vrep().points) lambda = max(lambda, p.gauge(v));
  for (const auto& w : p.ball_vrep().points)
    sup_q_over_p = max(sup_q_over_p, q.gauge(w));
  if (lambda.is_zero() || sup_q_over_p.is_zero())
    throw std::logic_error("equivalent: degenerate vertex gauges");
  cert.equivalent = true;
  cert.lambda = lambda;
  cert.kappa = sup_q_over_p.inv();

  // Recheck on every generator of both balls and at the ball level.
  for (const auto& v : q.ball_vrep().points) {
    const Rational qv = q.gauge(v), pv = p.gauge(v);
    if (!(cert.kappa * qv <= pv && pv <= cert.lambda * qv))
      throw std::logic_error("equivalent: generator inequality failed");
  }
  for (const auto& w : p.ball_vrep().points) {
    const Rational qw = q.gauge(w), pw = p.gauge(w);
    if (!(cert.kappa * qw <= pw && pw <= cert.lambda * qw))
      throw std::logic_error("equivalent: generator inequality failed");
  }
  if (!subset_test(q.ball_vrep(), scale(p.ball_hrep(), cert.lambda)).holds ||
      !subset_test(p.ball_vrep(), scale(q.ball_hrep(), cert.kappa.inv())).holds)
    throw std::logic_error("equivalent: ball containment failed");
  return cert;
}

StrongCompactness strongly_compact(const VPoly& set, const AsymNorm& n) {
  if (set.dim != n.dim()) throw DimensionMismatch("strongly_compact: dimensions");
  StrongCompactness out;
  for (const auto& r : set.rays)
    if (!n.theta().contains(r)) {
      out.strongly_compact = false;
      out.escaping_ray = r;
      return out;
    }
  out.strongly_compact = true;
  out.witness_set = VPoly(set.dim, set.points, {});
  if (!set.is_empty()) {
    const HPoly hull_plus_theta =
        to_hrep(minkowski_sum(out.witness_set, n.theta()));
    out.sandwich = subset_test(set, hull_plus_theta);
    if (!out.sandwich.holds)
      throw std::logic_error("strongly_compact: sandwich recheck failed");
  } else {
    out.sandwich.holds = true;
  }
  return out;
}

BallDecomposition ball_decomposition(const AsymNorm& n) {
  auto reduced = irredundant_vrep(n.ball_vrep());
  const auto& irr = std::get<IrredundantVrep>(reduced).reduced;
  BallDecomposition out;
  out.extreme_hull = VPoly(n.dim(), irr.points, {});
  const VPoly sum = minkowski_sum(out.extreme_hull, n.theta());
  out.check = subset_test(sum, n.ball_hrep()).holds &&
              subset_test(n.ball_vrep(), to_hrep(sum)).holds;
  return out;
}

ExtremeSet extreme_set(const VPoly& set, const AsymNorm& n) {
  if (set.dim != n.dim()) throw DimensionMismatch("extreme_set: dimensions");
  ExtremeSet out;
  auto reduced = irredundant_vrep(minkowski_sum(set, n.theta()));
  if (std::holds_alternative<NonPointed>(reduced)) {
    out.pointed = false;
    return out;
  }
  out.pointed = true;
  out.points = std::get<IrredundantVrep>(reduced).reduced.points;
  return out;
}

}  // namespace asymgauge
