#include "asymgauge/analytic.hpp"

#include <cmath>
#include <numbers>

namespace asymgauge {

namespace {

RatVector rvec2(long a, long b) {
  RatVector v(2);
  v << Rational(a), Rational(b);
  return v;
}

RatVector rvec3(long a, long b, long c) {
  RatVector v(3);
  v << Rational(a), Rational(b), Rational(c);
  return v;
}

}  // namespace

const AnalyticBody& hyperbola_body() {
  static const AnalyticBody body{
      "hyperbola",
      2,
      true,
      [](const VectorXd& p) {
        return p[0] < 2.0 && p[1] <= 1.0 / (p[0] - 2.0) + 2.0;
      },
      // Minimal admissible t solves 3t^2 - 2t(x+y) + xy = 0; the larger
      // root is the one above x/2, the smaller is an artifact of clearing
      // the (x - 2t) < 0 denominator.  Zero on the closed lower-left
      // quadrant.
      [](const VectorXd& p) {
        const double x = p[0], y = p[1];
        if (x <= 0.0 && y <= 0.0) return 0.0;
        return ((x + y) + std::sqrt(x * x - x * y + y * y)) / 3.0;
      },
      {rvec2(-1, 0), rvec2(0, -1)}};
  return body;
}

const AnalyticBody& cylinder_body() {
  static const AnalyticBody body{
      "cylinder",
      3,
      true,
      [](const VectorXd& p) {
        return p[1] * p[1] + p[2] * p[2] <= 1.0 && p[0] <= 1.0;
      },
      [](const VectorXd& p) {
        return std::max(std::max(p[0], 0.0), std::hypot(p[1], p[2]));
      },
      {rvec3(-1, 0, 0)}};
  return body;
}

const AnalyticBody& lattice_body() {
  static const AnalyticBody body{
      "lattice",
      2,
      true,
      [](const VectorXd& p) { return p[0] <= 1.0 && p[1] <= 1.0; },
      [](const VectorXd& p) {
        return std::max(std::max(p[0], 0.0), std::max(p[1], 0.0));
      },
      {rvec2(-1, 0), rvec2(0, -1)}};
  return body;
}

const AnalyticBody& parabola_body() {
  static const AnalyticBody body{
      "parabola",
      2,
      false,  // 0 sits on the boundary, so no gauge
      [](const VectorXd& p) { return p[0] <= 0.0 && p[1] <= -p[0] * p[0]; },
      {},
      {rvec2(-1, 0), rvec2(0, -1)}};
  return body;
}

const AnalyticBody* find_body(std::string_view name) {
  for (const AnalyticBody* b : {&hyperbola_body(), &cylinder_body(),
                                &lattice_body(), &parabola_body()})
    if (b->name == name) return b;
  return nullptr;
}

std::vector<std::string> body_names() {
  return {"hyperbola", "cylinder", "lattice", "parabola"};
}

GaugeBracket gauge_bisect(const AnalyticBody& b, const VectorXd& x,
                          double tol) {
  if (tol <= 0.0) throw std::invalid_argument("gauge_bisect: tol must be > 0");
  if (!b.gauge_body)
    throw UnboundedGauge("gauge_bisect: body does not contain 0 interior");
  if (x.size() != b.dim) throw DimensionMismatch("gauge_bisect: point width");
  if (x.isZero(0.0)) return {0.0, tol};

  double lo = 0.0, hi = 1.0;
  if (!b.member(x / hi)) {
    int doublings = 0;
    do {
      lo = hi;
      hi *= 2.0;
      if (++doublings > 64)
        throw UnboundedGauge("gauge_bisect: no absorption after 64 doublings");
    } while (!b.member(x / hi));
  } else {
    while (hi > tol && b.member(x / (hi / 2.0))) hi /= 2.0;
    if (hi <= tol) return {0.0, hi};  // inside every tested scaling
    lo = hi / 2.0;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double precision exhausted
    (b.member(x / mid) ? hi : lo) = mid;
  }
  return {lo, hi};
}

VPoly polyhedral_approx(const AnalyticBody& b, int resolution) {
  if (resolution < 4)
    throw std::invalid_argument("polyhedral_approx: resolution >= 4");
  const double boundary_tol = 1e-12;
  std::vector<VectorXd> fan;
  if (b.dim == 2) {
    for (int k = 0; k < resolution; ++k) {
      const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) /
                                         static_cast<double>(resolution));
      VectorXd u(2);
      u << std::cos(angle), std::sin(angle);
      fan.push_back(u);
    }
  } else if (b.dim == 3) {
    for (int k = 0; k < resolution; ++k) {
      const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) /
                                         static_cast<double>(resolution));
      VectorXd u(3);
      u << 0.0, std::cos(angle), std::sin(angle);
      fan.push_back(u);
    }
    VectorXd cap(3);
    cap << 1.0, 0.0, 0.0;
    fan.push_back(cap);
  } else {
    throw std::invalid_argument("polyhedral_approx: unsupported dimension");
  }

  std::vector<RatVector> vertices;
  for (const VectorXd& u : fan) {
    GaugeBracket g;
    try {
      g = gauge_bisect(b, u, boundary_tol);
    } catch (const UnboundedGauge&) {
      throw ApproxError("polyhedral_approx: bracketing failed", u);
    }
    if (g.hi <= boundary_tol) continue;  // null-cone direction, no vertex
    VectorXd vertex = u / g.hi;          // hi >= gauge keeps it inside
    if (!b.member(vertex)) {
      vertex *= 1.0 - 1e-9;
      if (!b.member(vertex))
        throw ApproxError("polyhedral_approx: boundary point escaped", u);
    }
    vertices.push_back(from_double_vector(vertex));
  }
  if (vertices.empty())
    throw ApproxError("polyhedral_approx: no boundary vertices",
                      VectorXd::Zero(b.dim));
  return VPoly(b.dim, std::move(vertices), b.theta_gens);
}

}  // namespace asymgauge
