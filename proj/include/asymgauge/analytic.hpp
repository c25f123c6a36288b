#pragma once

// Membership-oracle bodies for the non-polyhedral examples, a bisection
// gauge with guaranteed brackets, and inner polyhedral approximation.
// Everything here works in double precision; exact decisions stay in the
// polyhedral layer.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asymgauge/polyhedron.hpp"

namespace asymgauge {

struct AnalyticBody {
  std::string name;
  int dim = 0;
  // Indicator of a closed convex set.  gauge_body marks bodies with 0 in
  // the interior (those support gauge evaluation; the parabola set is
  // membership-only).
  bool gauge_body = true;
  std::function<bool(const VectorXd&)> member;
  std::function<double(const VectorXd&)> exact_gauge;  // empty if none known
  std::vector<RatVector> theta_gens;  // exact generators of the null cone
};

const AnalyticBody& hyperbola_body();
const AnalyticBody& cylinder_body();
const AnalyticBody& lattice_body();
const AnalyticBody& parabola_body();
const AnalyticBody* find_body(std::string_view name);
std::vector<std::string> body_names();

struct GaugeBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct UnboundedGauge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bracket [lo, hi] with hi - lo <= tol, x in hi*body and (lo = 0 or
// x outside lo*body).  Throws UnboundedGauge when 64 doublings never
// absorb x (the body is not absorbing there).
GaugeBracket gauge_bisect(const AnalyticBody& b, const VectorXd& x, double tol);

struct ApproxError : std::runtime_error {
  VectorXd direction;
  ApproxError(const std::string& what, VectorXd dir)
      : std::runtime_error(what), direction(std::move(dir)) {}
};

// Inner polyhedral approximation: boundary points along a deterministic
// direction fan (equal angles; in 3d the fan sweeps the y-z circle and adds
// +x), rays from the known null-cone generators.  Fans nest when the
// resolution doubles, so approximations grow with resolution.
VPoly polyhedral_approx(const AnalyticBody& b, int resolution);

}  // namespace asymgauge
