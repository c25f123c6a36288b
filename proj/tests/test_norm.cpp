#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asymgauge/norm.hpp"
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

AsymNorm lattice_norm() {
  return AsymNorm::from_hrep(
      HPoly(2, mat(2, 2, {1, 0, 0, 1}), rat_vector({1, 1})));
}

AsymNorm sup_norm() {
  return AsymNorm::from_hrep(HPoly(2, mat(4, 2, {1, 0, -1, 0, 0, 1, 0, -1}),
                                   rat_vector({1, 1, 1, 1})));
}

// Steep shifted ball conv{(2,-4),(0,2)} + negative quadrant, i.e.
// {x <= 2, y <= 2, 3x + y <= 2}.  Worked facet computation: the symmetrized
// ball is the quadrilateral (0,2),(4/3,-2),(0,-2),(-4/3,2); its downward
// closure is {x <= 4/3, y <= 2, 3x + y <= 2}, so the vertex (2,-4) has
// companion gauge 3/2 and the norm is right bounded with r* = 2/3 but not
// 1-bounded.
AsymNorm steep_norm() {
  return AsymNorm::from_hrep(
      HPoly(2, mat(3, 2, {1, 0, 0, 1, 3, 1}), rat_vector({2, 2, 2})));
}

// Independent gauge oracle from the halfspace form: for 0 interior,
// gauge(x) = max(0, max_i (a_i . x) / b_i).
Rational gauge_oracle(const HPoly& ball, const RatVector& x) {
  Rational g(0);
  for (Index i = 0; i < ball.rows(); ++i)
    g = max(g, Rational(ball.A.row(i).dot(x.transpose()) / ball.b[i]));
  return g;
}

RatVector rand_point(SplitMix64& rng, Index dim, long bound = 9) {
  RatVector x(dim);
  for (Index i = 0; i < dim; ++i)
    x[i] = Rational(rng.uniform_int(-bound, bound), rng.uniform_int(1, 4));
  return x;
}

}  // namespace

TEST_CASE("construction rejects invalid balls with the validation report") {
  // Halfplane: theta contains a line.
  CHECK_THROWS_AS(AsymNorm::from_hrep(
                      HPoly(2, mat(1, 2, {1, 0}), rat_vector({1}))),
                  BallError);
  // 0 on the boundary.
  try {
    AsymNorm::from_hrep(HPoly(2, mat(4, 2, {1, 0, -1, 0, 0, 1, 0, -1}),
                              rat_vector({1, 0, 1, 1})));
    CHECK(false);
  } catch (const BallError& e) {
    CHECK_FALSE(e.report.zero_interior);
  }
}

TEST_CASE("lattice gauge values: max(x+, y+)") {
  AsymNorm n = lattice_norm();
  CHECK(n.gauge(rat_vector({3, -5})) == Rational(3));
  CHECK(n.gauge(rat_vector({0, 0})) == Rational(0));
  CHECK(n.gauge(rat_vector({-2, -9})) == Rational(0));
  CHECK(n.gauge(rat_vector({-2, 9})) == Rational(9));
  CHECK(n.sym_gauge(rat_vector({3, -5})) == Rational(5));
}

TEST_CASE("gauge agrees with the halfspace-ratio oracle on random points") {
  SplitMix64 rng(123);
  for (const AsymNorm& n : {lattice_norm(), sup_norm(), steep_norm()})
    for (int k = 0; k < 40; ++k) {
      RatVector x = rand_point(rng, n.dim());
      CHECK(n.gauge(x) == gauge_oracle(n.ball_hrep(), x));
    }
}

TEST_CASE("theta cones: lattice quadrant, sup {0}") {
  AsymNorm lat = lattice_norm();
  REQUIRE(lat.theta().gens.size() == 2);
  CHECK(lat.theta().contains(rat_vector({-1, 0})));
  CHECK(lat.theta().contains(rat_vector({0, -1})));
  for (const auto& g : lat.theta().gens) CHECK(lat.gauge(g).is_zero());
  CHECK(sup_norm().theta().gens.empty());
}

TEST_CASE("symmetrize: lattice becomes the sup norm; symmetric stays put") {
  AsymNorm lat = lattice_norm();
  AsymNorm sym = symmetrize(lat);
  CHECK(set_equal(sym.ball_hrep(), sup_norm().ball_hrep()));
  CHECK(set_equal(symmetrize(sup_norm()).ball_hrep(), sup_norm().ball_hrep()));

  SplitMix64 rng(9);
  for (int k = 0; k < 100; ++k) {
    RatVector x = rand_point(rng, 2);
    const Rational qs = sym.gauge(x);
    CHECK(qs == lat.sym_gauge(x));  // ball-level equals pointwise max
    CHECK(qs >= lat.gauge(x));      // the symmetrized norm dominates
  }
}

TEST_CASE("canonical companion: 1-bounded norms keep their ball") {
  AsymNorm lat = lattice_norm();
  CHECK(set_equal(canonical_qp(lat).ball_hrep(), lat.ball_hrep()));
  AsymNorm sup = sup_norm();
  CHECK(set_equal(canonical_qp(sup).ball_hrep(), sup.ball_hrep()));
}

TEST_CASE("canonical companion of the steep norm shrinks the ball strictly") {
  AsymNorm n = steep_norm();
  AsymNorm qp = canonical_qp(n);
  HPoly expected(2, mat(3, 2, {3, 0, 0, 1, 3, 1}), rat_vector({4, 2, 2}));
  CHECK(set_equal(qp.ball_hrep(), expected));  // x <= 4/3, y <= 2, 3x+y <= 2
  CHECK(subset_test(qp.ball_vrep(), n.ball_hrep()).holds);
  CHECK_FALSE(subset_test(n.ball_vrep(), qp.ball_hrep()).holds);  // strict
}

TEST_CASE("companion pointwise evaluator agrees with the Minkowski ball") {
  SplitMix64 rng(31);
  for (const AsymNorm& n : {lattice_norm(), sup_norm(), steep_norm()}) {
    AsymNorm qp = canonical_qp(n);
    for (int k = 0; k < 25; ++k) {
      RatVector x = rand_point(rng, n.dim());
      CHECK(qp.gauge(x) == qp_gauge_pointwise(n, x));
    }
  }
}

TEST_CASE("right_bounded: lattice and sup are 1-bounded with r* = 1") {
  BoundednessCert lat = right_bounded(lattice_norm());
  CHECK(lat.r_star == Rational(1));
  CHECK(lat.one_bounded);
  BoundednessCert sup = right_bounded(sup_norm());
  CHECK(sup.r_star == Rational(1));
  CHECK(sup.one_bounded);
}

TEST_CASE("right_bounded: steep norm has r* = 2/3 and a witness vertex") {
  AsymNorm n = steep_norm();
  BoundednessCert cert = right_bounded(n);
  CHECK(cert.r_star == Rational(2, 3));
  CHECK_FALSE(cert.one_bounded);
  CHECK(cert.worst_vertex == rat_vector({2, -4}));
  CHECK(cert.containment.holds);
  // Any r' beyond r* must fail with a separating vertex.
  SubsetCertificate beyond = subset_test(
      scale(n.ball_vrep(), Rational(3, 4)), canonical_qp(n).ball_hrep());
  CHECK_FALSE(beyond.holds);
  REQUIRE(beyond.witness.has_value());
  RatVector scaled_worst(2);
  scaled_worst << Rational(3, 2), Rational(-3);  // (3/4) * (2,-4)
  CHECK(beyond.witness->generator == scaled_worst);
}

TEST_CASE("one_bounded is exactly ball == sym_ball + theta") {
  for (const AsymNorm& n : {lattice_norm(), sup_norm(), steep_norm()}) {
    const bool equal =
        set_equal(canonical_qp(n).ball_hrep(), n.ball_hrep());
    CHECK(right_bounded(n).one_bounded == equal);
  }
}

TEST_CASE("equivalent: reflexivity gives (1,1)") {
  AsymNorm lat = lattice_norm();
  EquivCert cert = equivalent(lat, lat);
  REQUIRE(cert.equivalent);
  CHECK(cert.kappa == Rational(1));
  CHECK(cert.lambda == Rational(1));
}

TEST_CASE("equivalent: doubling the norm gives kappa = lambda = 2") {
  AsymNorm q = lattice_norm();
  AsymNorm p = AsymNorm::from_hrep(scale(q.ball_hrep(), Rational(1, 2)));
  EquivCert cert = equivalent(q, p);  // p = 2q
  REQUIRE(cert.equivalent);
  CHECK(cert.kappa == Rational(2));
  CHECK(cert.lambda == Rational(2));
}

TEST_CASE("equivalent: lattice vs sup norm fails with a theta direction") {
  EquivCert cert = equivalent(lattice_norm(), sup_norm());
  REQUIRE_FALSE(cert.equivalent);
  // The direction lies in exactly one of the two cones.
  const bool in_lat = lattice_norm().theta().contains(cert.direction);
  const bool in_sup = sup_norm().theta().contains(cert.direction);
  CHECK(in_lat != in_sup);
}

TEST_CASE("strongly_compact: balls, shifted cones, and an escaping segment") {
  AsymNorm lat = lattice_norm();
  StrongCompactness ball = strongly_compact(lat.ball_vrep(), lat);
  CHECK(ball.strongly_compact);
  CHECK(ball.sandwich.holds);

  VPoly cone_at_zero(2, {rat_vector({0, 0})},
                     {rat_vector({-1, 0}), rat_vector({0, -1})});
  StrongCompactness origin = strongly_compact(cone_at_zero, lat);
  CHECK(origin.strongly_compact);
  CHECK(origin.witness_set.points.size() == 1);

  VPoly half_line(2, {rat_vector({0, 0}), rat_vector({0, 1})},
                  {rat_vector({1, 0})});
  StrongCompactness segment = strongly_compact(half_line, lat);
  CHECK_FALSE(segment.strongly_compact);
  REQUIRE(segment.escaping_ray.has_value());
  CHECK(*segment.escaping_ray == rat_vector({1, 0}));
}

TEST_CASE("ball_decomposition: extreme hull plus theta recovers the ball") {
  BallDecomposition lat = ball_decomposition(lattice_norm());
  CHECK(lat.check);
  REQUIRE(lat.extreme_hull.points.size() == 1);
  CHECK(lat.extreme_hull.points[0] == rat_vector({1, 1}));

  BallDecomposition sup = ball_decomposition(sup_norm());
  CHECK(sup.check);
  CHECK(sup.extreme_hull.points.size() == 4);

  BallDecomposition steep = ball_decomposition(steep_norm());
  CHECK(steep.check);
  CHECK(steep.extreme_hull.points.size() == 2);
}

TEST_CASE("extreme_set: lattice ball, squares, and the sym containment") {
  AsymNorm lat = lattice_norm();
  ExtremeSet es = extreme_set(lat.ball_vrep(), lat);
  REQUIRE(es.pointed);
  REQUIRE(es.points.size() == 1);
  CHECK(es.points[0] == rat_vector({1, 1}));

  AsymNorm sup = sup_norm();
  ExtremeSet corners = extreme_set(sup.ball_vrep(), sup);
  CHECK(corners.points.size() == 4);

  // For 1-bounded norms the extreme points sit inside the sym ball.
  for (const auto& p : es.points)
    CHECK(membership(lat.sym_ball_hrep(), p));

  // Non-pointed sums are reported as such.
  VPoly wide(2, {rat_vector({0, 0})}, {rat_vector({1, 1})});
  AsymNorm latn = lattice_norm();
  ExtremeSet bad = extreme_set(
      VPoly(2, {rat_vector({0, 0})},
            {rat_vector({1, 0}), rat_vector({-1, 0})}),
      latn);
  CHECK_FALSE(bad.pointed);
  CHECK(bad.points.empty());
}

TEST_CASE("closed balls translate by the center, not by r times it") {
  AsymNorm lat = lattice_norm();
  HPoly b = closed_ball(lat, Rational(2), rat_vector({5, 7}));
  CHECK(membership(b, rat_vector({5, 7})));
  CHECK(membership(b, rat_vector({7, 9})));        // center + 2*(1,1)
  CHECK_FALSE(membership(b, rat_vector({8, 7})));  // x exceeds 5 + 2
}

TEST_CASE("gauge axioms hold exactly on random inputs") {
  SplitMix64 rng(555);
  for (const AsymNorm& n : {lattice_norm(), steep_norm()})
    for (int k = 0; k < 30; ++k) {
      RatVector x = rand_point(rng, 2), y = rand_point(rng, 2);
      Rational a(rng.uniform_int(0, 12), rng.uniform_int(1, 5));
      CHECK(n.gauge(RatVector(a * x)) == a * n.gauge(x));
      CHECK(n.gauge(RatVector(x + y)) <= n.gauge(x) + n.gauge(y));
    }
}
