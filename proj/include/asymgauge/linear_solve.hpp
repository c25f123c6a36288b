#pragma once

// Exact dense linear solving by fraction-free (Bareiss) elimination.
// Works over any exact scalar with field operations; instantiated with
// Rational throughout the library.

#include <optional>
#include <variant>
#include <vector>

#include "asymgauge/types.hpp"

namespace asymgauge {

template <typename Scalar>
struct LinearSolution {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
};

// Row index of the inconsistency 0 = nonzero discovered during elimination.
struct NoSolution {
  Index inconsistent_row = -1;
};

template <typename Scalar>
using LinearSolveResult = std::variant<LinearSolution<Scalar>, NoSolution>;

// Solves A x = b for one solution (free variables pinned to 0), or reports
// the inconsistent row.  A may be rectangular and rank-deficient.
template <typename Scalar>
LinearSolveResult<Scalar> solve_linear(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  const Index m = A.rows(), n = A.cols();
  if (b.size() != m) throw DimensionMismatch("solve_linear: rhs size");

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M(m, n + 1);
  M.leftCols(n) = A;
  M.col(n) = b;
  std::vector<Index> row_of(m);
  for (Index i = 0; i < m; ++i) row_of[i] = i;

  std::vector<Index> pivot_col;
  Scalar prev_pivot(1);
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (!(M(i, c) == Scalar(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      M.row(p).swap(M.row(r));
      std::swap(row_of[p], row_of[r]);
    }
    const Scalar pivot = M(r, c);
    for (Index i = r + 1; i < m; ++i) {
      for (Index j = c + 1; j <= n; ++j)
        M(i, j) = (M(i, j) * pivot - M(i, c) * M(r, j)) / prev_pivot;
      M(i, c) = Scalar(0);
    }
    prev_pivot = pivot;
    pivot_col.push_back(c);
    ++r;
  }
  for (Index i = r; i < m; ++i)
    if (!(M(i, n) == Scalar(0))) return NoSolution{row_of[i]};

  LinearSolution<Scalar> sol;
  sol.x = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Constant(n, Scalar(0));
  for (Index k = r - 1; k >= 0; --k) {
    const Index c = pivot_col[static_cast<std::size_t>(k)];
    Scalar acc = M(k, n);
    for (Index j = c + 1; j < n; ++j) acc -= M(k, j) * sol.x[j];
    sol.x[c] = acc / M(k, c);
  }
  return sol;
}

// Basis of the null space {x : A x = 0}; empty when A has full column rank.
template <typename Scalar>
std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> kernel_basis(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Index m = A.rows(), n = A.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M = A;

  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (!(M(i, c) == Scalar(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) M.row(p).swap(M.row(r));
    const Scalar inv_pivot = Scalar(1) / M(r, c);
    M.row(r) *= inv_pivot;
    for (Index i = 0; i < m; ++i)
      if (i != r && !(M(i, c) == Scalar(0))) M.row(i) -= M(i, c) * M.row(r);
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<Vec> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vec v = Vec::Constant(n, Scalar(0));
    v[c] = Scalar(1);
    for (Index k = 0; k < static_cast<Index>(pivot_col.size()); ++k)
      v[pivot_col[static_cast<std::size_t>(k)]] = -M(k, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Scalar>
Index matrix_rank(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A) {
  return A.cols() - static_cast<Index>(kernel_basis<Scalar>(A).size());
}

}  // namespace asymgauge
