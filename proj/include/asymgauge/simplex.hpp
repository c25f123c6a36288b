#pragma once

// Exact rational linear programming with self-verifying certificates.
//
// lp_solve runs a dense two-phase primal simplex with Bland's pivot rule,
// so it terminates on every input and identical problems produce identical
// results.  Every returned status carries a certificate that lp_verify can
// recheck by plain rational arithmetic:
//   Optimal    -> dual vector, primal and dual objectives equal
//   Infeasible -> Farkas vector combining the rows into 0 <= negative
//   Unbounded  -> feasible point plus an improving feasible ray

#include <optional>
#include <vector>

#include "asymgauge/types.hpp"

namespace asymgauge {

enum class Sense { LE, EQ, GE };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPProblem {
  RatVector c;               // minimize c^T x
  RatMatrix A;               // m x n
  std::vector<Sense> sense;  // one per row
  RatVector b;
  std::vector<std::optional<Rational>> lower;  // per variable; nullopt = free

  Index rows() const { return A.rows(); }
  Index cols() const { return A.cols(); }
  void validate() const;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational objective;     // meaningful when Optimal
  RatVector x;            // Optimal: optimizer; Unbounded: a feasible point
  RatVector certificate;  // Optimal/Infeasible: length m; Unbounded: ray, length n
};

LPResult lp_solve(const LPProblem& p);

// Pure-arithmetic recheck of a result against its problem.
bool lp_verify(const LPProblem& p, const LPResult& r);

// Convenience builders used across the geometric layers.
inline std::vector<std::optional<Rational>> nonneg_bounds(Index n) {
  return std::vector<std::optional<Rational>>(static_cast<std::size_t>(n),
                                              Rational(0));
}
inline std::vector<std::optional<Rational>> free_bounds(Index n) {
  return std::vector<std::optional<Rational>>(static_cast<std::size_t>(n),
                                              std::nullopt);
}

}  // namespace asymgauge
