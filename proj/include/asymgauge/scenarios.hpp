#pragma once

// Executable reproductions of the three counterexample constructions:
// the hyperbola ball (right bounded, non-compact), the cylinder ball in R^3
// (compact, not strongly compact), and the parabola set (strongly compact
// with unbounded extreme boundary).  Each returns a deterministic report of
// named checks with expected/computed values.

#include <string>
#include <vector>

#include "asymgauge/analytic.hpp"

namespace asymgauge {

struct ScenarioCheck {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  // Informational rows document values recorded for reference (for example
  // both candidate limits of the cylinder sequence); they never gate.
  bool informational = false;
};

struct ScenarioReport {
  std::string name;
  std::vector<ScenarioCheck> checks;
  std::vector<VectorXd> witnesses;  // points behind failing checks

  bool pass() const {
    for (const auto& c : checks)
      if (!c.informational && !c.pass) return false;
    return true;
  }
};

ScenarioReport hyperbola_scenario();
ScenarioReport cylinder_scenario(int N);
ScenarioReport parabola_scenario();

// Cylinder sequence u_n = (-n, cos(n pi / (2(n+1))), sin(n pi / (2(n+1)))).
VectorXd cylinder_u(int n);

// Smallest index n with sym-gauge(u_n) > rho, as the refutation of any
// claimed sym-gauge bound rho; equals ceil(rho) + 1.
int cylinder_refute_bound(double rho);

// Exact inner model B_N: conv(diamond cap at x=1, rationalized u_1..u_N)
// plus the ray (-1,0,0); every u_n coordinate pair is nudged inward so that
// y^2 + z^2 <= 1 holds exactly.
VPoly cylinder_inner_model(int N);

}  // namespace asymgauge
