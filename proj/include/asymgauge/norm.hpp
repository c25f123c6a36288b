#pragma once

// The asymmetric-norm algebra over polyhedral unit balls: gauge evaluation,
// the null cone theta = {x : q(x) = 0}, the symmetrized norm q^s, the
// canonical 1-bounded companion q_p, and decision procedures for right-
// boundedness, equivalence, strong compactness, and ball geometry.  Every
// decision returns machine-checkable evidence.

#include <optional>
#include <vector>

#include "asymgauge/polyhedron.hpp"

namespace asymgauge {

struct BallError : std::invalid_argument {
  BallValidation report;
  explicit BallError(BallValidation r)
      : std::invalid_argument("ball fails the unit-ball axioms"),
        report(std::move(r)) {}
};

// Immutable after construction; the dual ball representations, the theta
// cone and the symmetrized ball are computed eagerly and shared freely.
class AsymNorm {
 public:
  static AsymNorm from_hrep(const HPoly& ball);
  static AsymNorm from_vrep(const VPoly& ball);

  Index dim() const { return ball_h_.dim; }
  const HPoly& ball_hrep() const { return ball_h_; }
  const VPoly& ball_vrep() const { return ball_v_; }
  const PCone& theta() const { return theta_; }
  const HPoly& sym_ball_hrep() const { return sym_h_; }
  const VPoly& sym_ball_vrep() const { return sym_v_; }

  // Minimal t >= 0 with x in t * ball, solved as a linear program over the
  // ball generators; 0 exactly on the theta cone.
  Rational gauge(const RatVector& x) const;

  // max(gauge(x), gauge(-x)): the symmetrized norm, evaluated pointwise.
  Rational sym_gauge(const RatVector& x) const;

 private:
  AsymNorm() = default;
  HPoly ball_h_;
  VPoly ball_v_;
  PCone theta_;
  HPoly sym_h_;
  VPoly sym_v_;
};

// Closed ball of radius r centered at x: r * ball + x.
HPoly closed_ball(const AsymNorm& n, const Rational& r, const RatVector& x);

// Norm whose ball is ball decomposed with -ball; always a genuine norm.
AsymNorm symmetrize(const AsymNorm& n);

// The canonical 1-bounded companion: ball = sym_ball + theta.
AsymNorm canonical_qp(const AsymNorm& n);

// Pointwise form of the companion gauge: inf over y in theta of q^s(x - y),
// as a linear program.  Must agree exactly with canonical_qp(n).gauge(x).
Rational qp_gauge_pointwise(const AsymNorm& n, const RatVector& x);

struct BoundednessCert {
  Rational r_star;    // optimal r with r * ball inside sym_ball + theta
  bool one_bounded = false;
  std::vector<std::pair<RatVector, Rational>> vertex_gauges;
  RatVector worst_vertex;          // attains the maximal companion gauge
  SubsetCertificate containment;   // r_star * ball inside the companion ball
};
BoundednessCert right_bounded(const AsymNorm& n);
// Same decision with the companion norm already at hand.
BoundednessCert right_bounded(const AsymNorm& n, const AsymNorm& companion);

// Ball equality through the cached dual forms (no fresh conversions).
bool same_ball(const AsymNorm& a, const AsymNorm& b);

struct EquivCert {
  bool equivalent = false;
  Rational kappa;  // kappa * q <= p <= lambda * q, q the first argument
  Rational lambda;
  RatVector direction;  // lies in exactly one theta when not equivalent
};
EquivCert equivalent(const AsymNorm& q, const AsymNorm& p);

struct StrongCompactness {
  bool strongly_compact = false;
  VPoly witness_set;  // q^s-compact S with S inside K inside S + theta
  std::optional<RatVector> escaping_ray;
  SubsetCertificate sandwich;  // evidence for K inside S + theta
};
StrongCompactness strongly_compact(const VPoly& set, const AsymNorm& n);

struct BallDecomposition {
  VPoly extreme_hull;  // conv(extreme points of the ball)
  bool check = false;  // ball == extreme_hull + theta, tested both ways
};
BallDecomposition ball_decomposition(const AsymNorm& n);

struct ExtremeSet {
  bool pointed = false;  // sum set + theta contained a line otherwise
  std::vector<RatVector> points;
};
ExtremeSet extreme_set(const VPoly& set, const AsymNorm& n);

}  // namespace asymgauge
