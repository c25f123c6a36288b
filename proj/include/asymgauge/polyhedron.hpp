#pragma once

// Exact polyhedral calculus over rational coordinates: dual representations
// via the double description method, recession cones, Minkowski sums,
// containment tests with certificates, extremality reduction, and the
// Caratheodory witness.  Empty and lower-dimensional sets are ordinary
// values, never errors.

#include <optional>
#include <variant>
#include <vector>

#include "asymgauge/simplex.hpp"
#include "asymgauge/types.hpp"

namespace asymgauge {

// {x in R^dim : A x <= b}.  Zero rows are rejected; m = 0 is the whole space.
struct HPoly {
  Index dim = 0;
  RatMatrix A;
  RatVector b;

  HPoly() = default;
  HPoly(Index d, RatMatrix A_, RatVector b_);

  Index rows() const { return A.rows(); }
  static HPoly whole_space(Index dim);
  static HPoly empty_set(Index dim);
};

// conv(points) + cone(rays).  No points means the empty set.  Lines are
// representable as +-ray pairs; pointedness is not assumed here.
struct VPoly {
  Index dim = 0;
  std::vector<RatVector> points;
  std::vector<RatVector> rays;

  VPoly() = default;
  VPoly(Index d, std::vector<RatVector> pts, std::vector<RatVector> rys);

  bool is_empty() const { return points.empty(); }
};

// Convex cone with apex 0, carried in both representations:
// cone(gens) + span(lines) = {d : A d <= 0}.
struct PCone {
  Index dim = 0;
  std::vector<RatVector> gens;
  std::vector<RatVector> lines;  // lineality basis; empty iff pointed
  RatMatrix A;

  bool pointed() const { return lines.empty(); }
  bool contains(const RatVector& d) const;
  VPoly to_vpoly() const;  // apex carried explicitly as the point 0
};

// --- double description -----------------------------------------------------

struct ConeGenerators {
  std::vector<RatVector> lines;
  std::vector<RatVector> rays;
};

// Generators of {x : M x <= 0} (rows flagged in eq hold with equality).
// Output is canonical: lines in reduced echelon form, rays reduced modulo
// the lineality space, primitive integer coordinates, sorted.
ConeGenerators cone_generators(const RatMatrix& M, const std::vector<bool>& eq = {});

// Dual-representation conversion.  to_vrep never throws on empty input; the
// returned VPoly has no points exactly when the set is empty.
VPoly to_vrep(const HPoly& h);
HPoly to_hrep(const VPoly& v);

// --- elementary operations ---------------------------------------------------

PCone recession_cone(const HPoly& p);  // throws on empty input
PCone cone_from_generators(Index dim, const std::vector<RatVector>& gens);

VPoly minkowski_sum(const VPoly& a, const PCone& c);
HPoly intersect(const HPoly& a, const HPoly& b);
HPoly scale(const HPoly& p, const Rational& r);   // r > 0
VPoly scale(const VPoly& p, const Rational& r);   // r > 0
HPoly translate(const HPoly& p, const RatVector& c);
HPoly negate(const HPoly& p);                      // -P

bool membership(const HPoly& p, const RatVector& x);

struct VMembership {
  bool inside = false;
  RatVector point_weights;  // convex weights when inside
  RatVector ray_weights;
  RatVector functional;  // separating f with f.gen <= threshold < f.x otherwise
  Rational threshold;
};
VMembership membership(const VPoly& p, const RatVector& x);

// --- containment -------------------------------------------------------------

struct SeparationWitness {
  RatVector generator;
  bool generator_is_ray = false;
  RatVector functional;  // valid inequality functional . x <= threshold for b
  Rational threshold;
  Rational value;  // functional . generator, exceeds threshold
};

struct SubsetCertificate {
  bool holds = false;
  // Row slacks per generator of a against the facets of b (evidence).
  std::vector<RatVector> point_slacks;
  std::vector<RatVector> ray_slacks;
  std::optional<SeparationWitness> witness;
};

SubsetCertificate subset_test(const VPoly& a, const HPoly& b);
SubsetCertificate subset_test(const HPoly& a, const HPoly& b);
SubsetCertificate subset_test(const VPoly& a, const VPoly& b);
SubsetCertificate subset_test(const HPoly& a, const VPoly& b);

template <typename A, typename B>
bool set_equal(const A& a, const B& b) {
  return subset_test(a, b).holds && subset_test(b, a).holds;
}

// --- extremality -------------------------------------------------------------

struct IrredundantVrep {
  VPoly reduced;  // points are exactly the extreme points, rays the extreme rays
};
struct NonPointed {
  std::vector<RatVector> lineality;  // generators witnessing contained lines
};
std::variant<IrredundantVrep, NonPointed> irredundant_vrep(const VPoly& v);

// --- unit-ball validation ----------------------------------------------------

struct BallValidation {
  bool zero_interior = false;
  std::optional<RatVector> infinite_direction;  // gauge is +inf along it
  bool convex = true;  // representations are convex by construction
  bool pointed_theta = false;
  std::optional<RatVector> theta_line;
  bool valid() const { return zero_interior && convex && pointed_theta; }
};
BallValidation validate_unit_ball(const HPoly& ball);
BallValidation validate_unit_ball(const VPoly& ball);

// --- Caratheodory ------------------------------------------------------------

struct ConvexCombination {
  std::vector<std::pair<Index, Rational>> weights;  // <= dim+1 nonzero entries
};
struct NotInHull {
  RatVector functional;
  Rational threshold;  // functional . p_i <= threshold for all i, > at x
};
std::variant<ConvexCombination, NotInHull> caratheodory_witness(
    const std::vector<RatVector>& points, const RatVector& x);

// Scale a rational vector to primitive integer coordinates (rays keep their
// orientation).  Zero stays zero.
RatVector primitive(const RatVector& v);

bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace asymgauge
