#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asymgauge/linear_solve.hpp"
#include "asymgauge/rng.hpp"

using namespace asymgauge;

namespace {
RatMatrix mat(Index m, Index n, std::initializer_list<long> e) {
  RatMatrix A(m, n);
  auto it = e.begin();
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = Rational(*it++);
  return A;
}
}  // namespace

TEST_CASE("identity system returns the rhs") {
  RatMatrix A = mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  RatVector b = rat_vector({4, -5, 6});
  auto r = solve_linear<Rational>(A, b);
  CHECK(std::get<LinearSolution<Rational>>(r).x == b);
}

TEST_CASE("2x2 symmetric system {x+y=2, x-y=0} -> (1,1)") {
  RatMatrix A = mat(2, 2, {1, 1, 1, -1});
  RatVector b = rat_vector({2, 0});
  auto r = solve_linear<Rational>(A, b);
  CHECK(std::get<LinearSolution<Rational>>(r).x == rat_vector({1, 1}));
}

TEST_CASE("inconsistent singular system reports the bad row") {
  RatMatrix A = mat(2, 2, {1, 1, 1, 1});
  RatVector b = rat_vector({1, 2});
  auto r = solve_linear<Rational>(A, b);
  CHECK(std::get<NoSolution>(r).inconsistent_row == 1);
}

TEST_CASE("underdetermined consistent systems get one exact solution") {
  RatMatrix A = mat(1, 3, {2, 4, -2});
  RatVector b = rat_vector({6});
  auto r = solve_linear<Rational>(A, b);
  const RatVector x = std::get<LinearSolution<Rational>>(r).x;
  CHECK(A * x == b);
}

TEST_CASE("random square systems: residual is exactly zero") {
  SplitMix64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const Index n = static_cast<Index>(rng.uniform_int(1, 5));
    RatMatrix A(n, n);
    RatVector b(n);
    for (Index i = 0; i < n; ++i) {
      b[i] = Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
      for (Index j = 0; j < n; ++j)
        A(i, j) = Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
    }
    auto r = solve_linear<Rational>(A, b);
    if (auto* sol = std::get_if<LinearSolution<Rational>>(&r)) {
      RatVector res = A * sol->x - b;
      for (Index i = 0; i < n; ++i) CHECK(res[i].is_zero());
    }
  }
}

TEST_CASE("kernel basis spans the null space") {
  RatMatrix A = mat(2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
  auto K = kernel_basis<Rational>(A);
  REQUIRE(K.size() == 2);
  for (const auto& v : K) {
    RatVector img = A * v;
    CHECK(img[0].is_zero());
    CHECK(img[1].is_zero());
  }
  CHECK(matrix_rank<Rational>(A) == 2);

  RatMatrix full = mat(2, 2, {1, 2, 3, 4});
  CHECK(kernel_basis<Rational>(full).empty());
  CHECK(matrix_rank<Rational>(full) == 2);
}
