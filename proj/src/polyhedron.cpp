#include "asymgauge/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "asymgauge/linear_solve.hpp"

namespace asymgauge {

namespace {

bool is_zero_vec(const RatVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

void sort_unique(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end(),
                       [](const RatVector& a, const RatVector& b) {
                         return a == b;
                       }),
           vs.end());
}

}  // namespace

bool lex_less(const RatVector& a, const RatVector& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

RatVector primitive(const RatVector& v) {
  if (is_zero_vec(v)) return v;
  mpz_t l, g, tmp;
  mpz_inits(l, g, tmp, nullptr);
  mpz_set_ui(l, 1);
  for (Index i = 0; i < v.size(); ++i) mpz_lcm(l, l, mpq_denref(v[i].raw()));
  mpz_set_ui(g, 0);
  for (Index i = 0; i < v.size(); ++i) {
    mpz_divexact(tmp, l, mpq_denref(v[i].raw()));
    mpz_mul(tmp, tmp, mpq_numref(v[i].raw()));
    mpz_gcd(g, g, tmp);
  }
  RatVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    Rational r;
    mpz_divexact(tmp, l, mpq_denref(v[i].raw()));
    mpz_mul(tmp, tmp, mpq_numref(v[i].raw()));
    mpz_divexact(tmp, tmp, g);
    mpz_set(mpq_numref(r.raw()), tmp);
    out[i] = r;
  }
  mpz_clears(l, g, tmp, nullptr);
  return out;
}

// --- constructors ------------------------------------------------------------

HPoly::HPoly(Index d, RatMatrix A_, RatVector b_)
    : dim(d), A(std::move(A_)), b(std::move(b_)) {
  if (A.rows() != b.size()) throw DimensionMismatch("HPoly: rhs length");
  if (A.rows() > 0 && A.cols() != dim) throw DimensionMismatch("HPoly: width");
  for (Index i = 0; i < A.rows(); ++i)
    if (is_zero_vec(A.row(i).transpose()))
      throw std::invalid_argument("HPoly: zero row");
}

HPoly HPoly::whole_space(Index dim) {
  return HPoly(dim, RatMatrix(0, dim), RatVector(0));
}

HPoly HPoly::empty_set(Index dim) {
  RatMatrix A = RatMatrix::Constant(2, dim, Rational(0));
  A(0, 0) = Rational(1);
  A(1, 0) = Rational(-1);
  RatVector b = RatVector::Constant(2, Rational(-1));
  return HPoly(dim, std::move(A), std::move(b));  // x1 <= -1 and x1 >= 1
}

VPoly::VPoly(Index d, std::vector<RatVector> pts, std::vector<RatVector> rys)
    : dim(d), points(std::move(pts)), rays(std::move(rys)) {
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch("VPoly: point width");
  for (const auto& r : rays) {
    if (r.size() != dim) throw DimensionMismatch("VPoly: ray width");
    if (is_zero_vec(r)) throw std::invalid_argument("VPoly: zero ray");
  }
}

bool PCone::contains(const RatVector& d) const {
  if (d.size() != dim) throw DimensionMismatch("PCone: direction width");
  for (Index i = 0; i < A.rows(); ++i)
    if (A.row(i).dot(d.transpose()) > Rational(0)) return false;
  return true;
}

VPoly PCone::to_vpoly() const {
  std::vector<RatVector> rays = gens;
  for (const auto& l : lines) {
    rays.push_back(l);
    rays.push_back(-l);
  }
  return VPoly(dim, {RatVector::Constant(dim, Rational(0))}, std::move(rays));
}

// --- double description core -------------------------------------------------

namespace {

// Ray paired with its tight-row set over the processed prefix.  Tightness
// updates run combinatorially: a combination of two rays with positive
// coefficients and nonpositive row values is tight exactly where both
// parents are, and rays adjusted along a crossing line keep their old row
// values because processed rows annihilate every surviving line.
struct DDRay {
  RatVector v;
  std::vector<bool> tight;
};

struct DDState {
  std::vector<RatVector> lines;
  std::vector<DDRay> rays;
};

bool subset_of(const std::vector<bool>& inner, const std::vector<bool>& outer) {
  for (std::size_t k = 0; k < inner.size(); ++k)
    if (inner[k] && !outer[k]) return false;
  return true;
}

}  // namespace

ConeGenerators cone_generators(const RatMatrix& M, const std::vector<bool>& eq) {
  const Index m = M.rows(), d = M.cols();
  if (!eq.empty() && static_cast<Index>(eq.size()) != m)
    throw DimensionMismatch("cone_generators: eq mask length");

  DDState s;
  s.lines.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    RatVector e = RatVector::Constant(d, Rational(0));
    e[i] = Rational(1);
    s.lines.push_back(std::move(e));
  }
  std::size_t processed = 0;

  for (Index row = 0; row < m; ++row) {
    const bool is_eq = !eq.empty() && eq[static_cast<std::size_t>(row)];
    const auto dot = [&](const RatVector& v) {
      return Rational(M.row(row).dot(v.transpose()));
    };

    Index crossing = -1;
    for (std::size_t k = 0; k < s.lines.size(); ++k)
      if (!dot(s.lines[k]).is_zero()) {
        crossing = static_cast<Index>(k);
        break;
      }

    if (crossing >= 0) {
      RatVector l0 = s.lines[static_cast<std::size_t>(crossing)];
      const Rational d0 = dot(l0);
      std::vector<RatVector> new_lines;
      for (std::size_t k = 0; k < s.lines.size(); ++k) {
        if (static_cast<Index>(k) == crossing) continue;
        const Rational dk = dot(s.lines[k]);
        RatVector l = s.lines[k];
        if (!dk.is_zero()) l -= (dk / d0) * l0;
        new_lines.push_back(primitive(l));
      }
      for (auto& r : s.rays) {
        const Rational dr = dot(r.v);
        if (!dr.is_zero()) r.v = primitive(RatVector(r.v - (dr / d0) * l0));
        r.tight.push_back(true);  // adjusted onto the hyperplane
      }
      s.lines = std::move(new_lines);
      if (!is_eq) {
        RatVector entering = d0 < Rational(0) ? l0 : RatVector(-l0);
        DDRay rho{primitive(entering), std::vector<bool>(processed, true)};
        rho.tight.push_back(false);  // strictly interior to the halfspace
        s.rays.push_back(std::move(rho));
      }
      ++processed;
      continue;
    }

    // All lines sit on the hyperplane; split the rays.
    std::vector<Index> plus, zero, minus;
    std::vector<Rational> val(s.rays.size());
    for (std::size_t k = 0; k < s.rays.size(); ++k) {
      val[k] = dot(s.rays[k].v);
      const int sg = val[k].sign();
      (sg > 0 ? plus : sg < 0 ? minus : zero).push_back(static_cast<Index>(k));
    }
    if (plus.empty() && (is_eq ? minus.empty() : true)) {
      for (std::size_t k = 0; k < s.rays.size(); ++k)
        s.rays[k].tight.push_back(val[k].is_zero());
      ++processed;
      continue;  // constraint already valid everywhere
    }

    std::vector<DDRay> next;
    for (Index k : zero) {
      DDRay kept = s.rays[static_cast<std::size_t>(k)];
      kept.tight.push_back(true);
      next.push_back(std::move(kept));
    }
    if (!is_eq)
      for (Index k : minus) {
        DDRay kept = s.rays[static_cast<std::size_t>(k)];
        kept.tight.push_back(false);
        next.push_back(std::move(kept));
      }

    for (Index p : plus)
      for (Index n : minus) {
        const auto& tp = s.rays[static_cast<std::size_t>(p)].tight;
        const auto& tn = s.rays[static_cast<std::size_t>(n)].tight;
        std::vector<bool> common(processed);
        for (std::size_t k = 0; k < processed; ++k) common[k] = tp[k] && tn[k];
        bool adjacent = true;
        for (std::size_t other = 0; other < s.rays.size() && adjacent; ++other) {
          if (static_cast<Index>(other) == p || static_cast<Index>(other) == n)
            continue;
          if (subset_of(common, s.rays[other].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVector w = val[static_cast<std::size_t>(p)] *
                          s.rays[static_cast<std::size_t>(n)].v -
                      val[static_cast<std::size_t>(n)] *
                          s.rays[static_cast<std::size_t>(p)].v;
        common.push_back(true);
        next.push_back(DDRay{primitive(w), std::move(common)});
      }
    std::sort(next.begin(), next.end(),
              [](const DDRay& a, const DDRay& b) { return lex_less(a.v, b.v); });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const DDRay& a, const DDRay& b) {
                             return a.v == b.v;
                           }),
               next.end());
    s.rays = std::move(next);
    ++processed;
  }

  // Canonical form: echelonize the lineality basis, reduce rays modulo it.
  ConeGenerators out;
  if (!s.lines.empty()) {
    RatMatrix L(static_cast<Index>(s.lines.size()), d);
    for (std::size_t k = 0; k < s.lines.size(); ++k)
      L.row(static_cast<Index>(k)) = s.lines[k].transpose();
    Index r = 0;
    std::vector<Index> pivots;
    for (Index c = 0; c < d && r < L.rows(); ++c) {
      Index p = -1;
      for (Index i = r; i < L.rows(); ++i)
        if (!L(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r) L.row(p).swap(L.row(r));
      L.row(r) /= L(r, c);
      for (Index i = 0; i < L.rows(); ++i)
        if (i != r && !L(i, c).is_zero()) L.row(i) -= L(i, c) * L.row(r);
      pivots.push_back(c);
      ++r;
    }
    for (Index k = 0; k < r; ++k)
      out.lines.push_back(primitive(L.row(k).transpose()));
    for (const auto& dd : s.rays) {
      RatVector ray = dd.v;
      for (Index k = 0; k < r; ++k) {
        const Rational coef = ray[pivots[static_cast<std::size_t>(k)]] /
                              out.lines[static_cast<std::size_t>(k)]
                                       [pivots[static_cast<std::size_t>(k)]];
        if (!coef.is_zero())
          ray -= coef * out.lines[static_cast<std::size_t>(k)];
      }
      out.rays.push_back(primitive(ray));
    }
  } else {
    out.rays.reserve(s.rays.size());
    for (const auto& dd : s.rays) out.rays.push_back(dd.v);
  }
  sort_unique(out.rays);
  return out;
}

// --- conversions -------------------------------------------------------------

VPoly to_vrep(const HPoly& h) {
  const Index d = h.dim;
  RatMatrix M(h.rows() + 1, d + 1);
  for (Index i = 0; i < h.rows(); ++i) {
    M.row(i).head(d) = h.A.row(i);
    M(i, d) = -h.b[i];
  }
  M.row(h.rows()).setConstant(Rational(0));
  M(h.rows(), d) = Rational(-1);  // t >= 0

  // Lexicographic insertion order keeps the run deterministic.
  std::vector<Index> order(static_cast<std::size_t>(M.rows()));
  for (Index i = 0; i < M.rows(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return lex_less(M.row(a).transpose(), M.row(b).transpose());
  });
  RatMatrix sorted(M.rows(), d + 1);
  for (Index i = 0; i < M.rows(); ++i)
    sorted.row(i) = M.row(order[static_cast<std::size_t>(i)]);

  ConeGenerators g = cone_generators(sorted);

  VPoly out;
  out.dim = d;
  for (const auto& l : g.lines) {
    if (!l[d].is_zero())
      throw std::logic_error("to_vrep: line with positive height");
    RatVector dir = primitive(l.head(d));
    out.rays.push_back(dir);
    out.rays.push_back(-dir);
  }
  for (const auto& r : g.rays) {
    const Rational& t = r[d];
    if (t.is_zero()) {
      out.rays.push_back(primitive(r.head(d)));
    } else if (t > Rational(0)) {
      RatVector p = r.head(d) / t;
      out.points.push_back(std::move(p));
    } else {
      throw std::logic_error("to_vrep: ray below the t >= 0 halfspace");
    }
  }
  if (out.points.empty()) return VPoly(d, {}, {});  // canonical empty set
  sort_unique(out.points);
  sort_unique(out.rays);
  return out;
}

HPoly to_hrep(const VPoly& v) {
  const Index d = v.dim;
  if (v.is_empty()) return HPoly::empty_set(d);

  RatMatrix G(static_cast<Index>(v.points.size() + v.rays.size()), d + 1);
  Index row = 0;
  for (const auto& p : v.points) {
    G.row(row).head(d) = p.transpose();
    G(row, d) = Rational(1);
    ++row;
  }
  for (const auto& r : v.rays) {
    G.row(row).head(d) = r.transpose();
    G(row, d) = Rational(0);
    ++row;
  }
  std::vector<Index> order(static_cast<std::size_t>(G.rows()));
  for (Index i = 0; i < G.rows(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return lex_less(G.row(a).transpose(), G.row(b).transpose());
  });
  RatMatrix sorted(G.rows(), d + 1);
  for (Index i = 0; i < G.rows(); ++i)
    sorted.row(i) = G.row(order[static_cast<std::size_t>(i)]);

  // Generators of the polar cone give the facets of the homogenization.
  ConeGenerators polar = cone_generators(sorted);

  std::vector<RatVector> facet_rows;
  auto push_row = [&](const RatVector& f) {
    if (is_zero_vec(f.head(d))) {
      if (f[d] > Rational(0))
        throw std::logic_error("to_hrep: nonempty input produced 0 <= -c");
      return;  // trivially valid row
    }
    facet_rows.push_back(primitive(f));
  };
  for (const auto& l : polar.lines) {
    push_row(l);
    push_row(-l);
  }
  for (const auto& r : polar.rays) push_row(r);
  sort_unique(facet_rows);

  RatMatrix A(static_cast<Index>(facet_rows.size()), d);
  RatVector b(static_cast<Index>(facet_rows.size()));
  for (std::size_t i = 0; i < facet_rows.size(); ++i) {
    A.row(static_cast<Index>(i)) = facet_rows[i].head(d).transpose();
    b[static_cast<Index>(i)] = -facet_rows[i][d];
  }
  return HPoly(d, std::move(A), std::move(b));
}

// --- elementary operations ---------------------------------------------------

PCone recession_cone(const HPoly& p) {
  if (p.rows() == 0) {
    // Whole space: recession cone is the whole space as well.
    PCone c;
    c.dim = p.dim;
    c.A = RatMatrix(0, p.dim);
    ConeGenerators g = cone_generators(c.A);
    c.lines = g.lines;
    c.gens = g.rays;
    return c;
  }
  bool origin_inside = true;
  for (Index i = 0; i < p.rows(); ++i)
    if (p.b[i] < Rational(0)) origin_inside = false;
  if (!origin_inside) {
    LPProblem probe;
    probe.c = RatVector::Constant(p.dim, Rational(0));
    probe.A = p.A;
    probe.b = p.b;
    probe.sense.assign(static_cast<std::size_t>(p.rows()), Sense::LE);
    probe.lower = free_bounds(p.dim);
    if (lp_solve(probe).status == LPStatus::Infeasible)
      throw std::invalid_argument("recession_cone: empty polyhedron");
  }

  PCone c;
  c.dim = p.dim;
  c.A = p.A;
  ConeGenerators g = cone_generators(p.A);
  c.lines = g.lines;
  c.gens = g.rays;
  return c;
}

PCone cone_from_generators(Index dim, const std::vector<RatVector>& gens) {
  VPoly v(dim, {RatVector::Constant(dim, Rational(0))}, gens);
  HPoly h = to_hrep(v);
  PCone c;
  c.dim = dim;
  c.A = h.A;  // b = 0 rows for a cone through the origin
  for (Index i = 0; i < h.b.size(); ++i)
    if (!h.b[i].is_zero()) throw std::logic_error("cone_from_generators: apex moved");
  ConeGenerators g = cone_generators(c.A);
  c.lines = g.lines;
  c.gens = g.rays;
  return c;
}

VPoly minkowski_sum(const VPoly& a, const PCone& c) {
  if (a.dim != c.dim) throw DimensionMismatch("minkowski_sum: dimensions");
  if (a.is_empty()) return a;
  std::vector<RatVector> rays = a.rays;
  for (auto& r : rays) r = primitive(r);
  for (const auto& g : c.gens) rays.push_back(primitive(g));
  for (const auto& l : c.lines) {
    rays.push_back(primitive(l));
    rays.push_back(primitive(RatVector(-l)));
  }
  sort_unique(rays);
  return VPoly(a.dim, a.points, std::move(rays));
}

HPoly intersect(const HPoly& a, const HPoly& b) {
  if (a.dim != b.dim) throw DimensionMismatch("intersect: dimensions");
  RatMatrix A(a.rows() + b.rows(), a.dim);
  RatVector rhs(a.rows() + b.rows());
  A.topRows(a.rows()) = a.A;
  A.bottomRows(b.rows()) = b.A;
  rhs.head(a.rows()) = a.b;
  rhs.tail(b.rows()) = b.b;
  return HPoly(a.dim, std::move(A), std::move(rhs));
}

HPoly scale(const HPoly& p, const Rational& r) {
  if (!(r > Rational(0))) throw std::invalid_argument("scale: factor must be > 0");
  return HPoly(p.dim, p.A, RatVector(r * p.b));
}

VPoly scale(const VPoly& p, const Rational& r) {
  if (!(r > Rational(0))) throw std::invalid_argument("scale: factor must be > 0");
  VPoly out = p;
  for (auto& pt : out.points) pt = r * pt;
  return out;
}

HPoly translate(const HPoly& p, const RatVector& c) {
  if (c.size() != p.dim) throw DimensionMismatch("translate: center width");
  return HPoly(p.dim, p.A, RatVector(p.b + p.A * c));
}

HPoly negate(const HPoly& p) { return HPoly(p.dim, RatMatrix(-p.A), p.b); }

bool membership(const HPoly& p, const RatVector& x) {
  if (x.size() != p.dim) throw DimensionMismatch("membership: point width");
  for (Index i = 0; i < p.rows(); ++i)
    if (p.A.row(i).dot(x.transpose()) > p.b[i]) return false;
  return true;
}

VMembership membership(const VPoly& p, const RatVector& x) {
  if (x.size() != p.dim) throw DimensionMismatch("membership: point width");
  VMembership out;
  if (p.is_empty()) {
    out.inside = false;
    out.functional = RatVector::Constant(p.dim, Rational(0));
    out.threshold = Rational(-1);  // vacuously valid for the empty set
    return out;
  }
  const Index np = static_cast<Index>(p.points.size());
  const Index nr = static_cast<Index>(p.rays.size());
  LPProblem lp;
  lp.c = RatVector::Constant(np + nr, Rational(0));
  lp.A = RatMatrix(p.dim + 1, np + nr);
  for (Index j = 0; j < np; ++j) {
    lp.A.col(j).head(p.dim) = p.points[static_cast<std::size_t>(j)];
    lp.A(p.dim, j) = Rational(1);
  }
  for (Index j = 0; j < nr; ++j) {
    lp.A.col(np + j).head(p.dim) = p.rays[static_cast<std::size_t>(j)];
    lp.A(p.dim, np + j) = Rational(0);
  }
  lp.b = RatVector(p.dim + 1);
  lp.b.head(p.dim) = x;
  lp.b[p.dim] = Rational(1);
  lp.sense.assign(static_cast<std::size_t>(p.dim + 1), Sense::EQ);
  lp.lower = nonneg_bounds(np + nr);
  LPResult r = lp_solve(lp);
  if (r.status == LPStatus::Optimal) {
    out.inside = true;
    out.point_weights = r.x.head(np);
    out.ray_weights = r.x.tail(nr);
  } else {
    out.inside = false;
    out.functional = r.certificate.head(p.dim);
    out.threshold = -r.certificate[p.dim];
  }
  return out;
}

// --- containment -------------------------------------------------------------

SubsetCertificate subset_test(const VPoly& a, const HPoly& b) {
  if (a.dim != b.dim) throw DimensionMismatch("subset_test: dimensions");
  SubsetCertificate cert;
  cert.holds = true;
  for (const auto& pt : a.points) {
    RatVector slack = b.b - b.A * pt;
    for (Index i = 0; i < slack.size(); ++i)
      if (slack[i] < Rational(0)) {
        cert.holds = false;
        SeparationWitness w;
        w.generator = pt;
        w.generator_is_ray = false;
        w.functional = b.A.row(i).transpose();
        w.threshold = b.b[i];
        w.value = b.A.row(i).dot(pt.transpose());
        cert.witness = std::move(w);
        return cert;
      }
    cert.point_slacks.push_back(std::move(slack));
  }
  for (const auto& ray : a.rays) {
    RatVector along = b.A * ray;
    for (Index i = 0; i < along.size(); ++i)
      if (along[i] > Rational(0)) {
        cert.holds = false;
        SeparationWitness w;
        w.generator = ray;
        w.generator_is_ray = true;
        w.functional = b.A.row(i).transpose();
        w.threshold = Rational(0);
        w.value = along[i];
        cert.witness = std::move(w);
        return cert;
      }
    cert.ray_slacks.push_back(RatVector(-along));
  }
  return cert;
}

SubsetCertificate subset_test(const HPoly& a, const HPoly& b) {
  return subset_test(to_vrep(a), b);
}
SubsetCertificate subset_test(const VPoly& a, const VPoly& b) {
  return subset_test(a, to_hrep(b));
}
SubsetCertificate subset_test(const HPoly& a, const VPoly& b) {
  return subset_test(to_vrep(a), to_hrep(b));
}

// --- extremality -------------------------------------------------------------

namespace {

bool in_conic_hull(const std::vector<RatVector>& gens, const RatVector& x,
                   Index dim) {
  if (gens.empty()) return is_zero_vec(x);
  LPProblem lp;
  const Index n = static_cast<Index>(gens.size());
  lp.c = RatVector::Constant(n, Rational(0));
  lp.A = RatMatrix(dim, n);
  for (Index j = 0; j < n; ++j)
    lp.A.col(j) = gens[static_cast<std::size_t>(j)];
  lp.b = x;
  lp.sense.assign(static_cast<std::size_t>(dim), Sense::EQ);
  lp.lower = nonneg_bounds(n);
  return lp_solve(lp).status == LPStatus::Optimal;
}

bool in_convex_conic_hull(const std::vector<RatVector>& points,
                          const std::vector<RatVector>& rays,
                          const RatVector& x, Index dim) {
  VPoly v(dim, points, rays);
  if (v.is_empty()) return false;
  return membership(v, x).inside;
}

}  // namespace

std::variant<IrredundantVrep, NonPointed> irredundant_vrep(const VPoly& v) {
  if (v.is_empty())
    throw std::invalid_argument("irredundant_vrep: empty input");
  std::vector<RatVector> points = v.points;
  std::vector<RatVector> rays;
  rays.reserve(v.rays.size());
  for (const auto& r : v.rays) rays.push_back(primitive(r));
  sort_unique(points);
  sort_unique(rays);

  NonPointed np;
  for (const auto& r : rays)
    if (in_conic_hull(rays, RatVector(-r), v.dim)) np.lineality.push_back(r);
  if (!np.lineality.empty()) return np;

  // Points: drop anything expressible over the remaining generators.
  for (std::size_t i = 0; i < points.size();) {
    std::vector<RatVector> others;
    for (std::size_t k = 0; k < points.size(); ++k)
      if (k != i) others.push_back(points[k]);
    if (in_convex_conic_hull(others, rays, points[i], v.dim))
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  for (std::size_t j = 0; j < rays.size();) {
    std::vector<RatVector> others;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (k != j) others.push_back(rays[k]);
    if (in_conic_hull(others, rays[j], v.dim))
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(j));
    else
      ++j;
  }
  return IrredundantVrep{VPoly(v.dim, std::move(points), std::move(rays))};
}

// --- unit-ball validation ----------------------------------------------------

BallValidation validate_unit_ball(const HPoly& ball) {
  BallValidation rep;
  rep.zero_interior = true;
  for (Index i = 0; i < ball.rows(); ++i)
    if (!(ball.b[i] > Rational(0))) {
      rep.zero_interior = false;
      rep.infinite_direction = RatVector(ball.A.row(i).transpose());
      break;
    }
  auto kernel = kernel_basis<Rational>(ball.A);
  if (ball.rows() == 0) {
    // Whole space: every direction is a line of the recession cone.
    rep.pointed_theta = false;
    rep.theta_line = RatVector::Unit(ball.dim, 0).eval();
    RatVector e = RatVector::Constant(ball.dim, Rational(0));
    e[0] = Rational(1);
    rep.theta_line = e;
    return rep;
  }
  if (kernel.empty()) {
    rep.pointed_theta = true;
  } else {
    rep.pointed_theta = false;
    rep.theta_line = primitive(kernel.front());
  }
  return rep;
}

BallValidation validate_unit_ball(const VPoly& ball) {
  if (ball.is_empty()) {
    BallValidation rep;
    rep.zero_interior = false;
    rep.pointed_theta = true;
    return rep;
  }
  return validate_unit_ball(to_hrep(ball));
}

// --- Caratheodory ------------------------------------------------------------

std::variant<ConvexCombination, NotInHull> caratheodory_witness(
    const std::vector<RatVector>& points, const RatVector& x) {
  if (points.empty()) {
    NotInHull res;
    res.functional = RatVector::Constant(x.size(), Rational(0));
    res.threshold = Rational(-1);
    return res;
  }
  const Index d = x.size();
  const Index n = static_cast<Index>(points.size());
  LPProblem lp;
  lp.c = RatVector::Constant(n, Rational(0));
  lp.A = RatMatrix(d + 1, n);
  for (Index j = 0; j < n; ++j) {
    if (points[static_cast<std::size_t>(j)].size() != d)
      throw DimensionMismatch("caratheodory_witness: point width");
    lp.A.col(j).head(d) = points[static_cast<std::size_t>(j)];
    lp.A(d, j) = Rational(1);
  }
  lp.b = RatVector(d + 1);
  lp.b.head(d) = x;
  lp.b[d] = Rational(1);
  lp.sense.assign(static_cast<std::size_t>(d + 1), Sense::EQ);
  lp.lower = nonneg_bounds(n);
  LPResult r = lp_solve(lp);
  if (r.status == LPStatus::Optimal) {
    ConvexCombination comb;
    for (Index j = 0; j < n; ++j)
      if (!r.x[j].is_zero()) comb.weights.emplace_back(j, r.x[j]);
    if (static_cast<Index>(comb.weights.size()) > d + 1)
      throw std::logic_error("caratheodory_witness: basis exceeded dim+1");
    return comb;
  }
  NotInHull res;
  res.functional = r.certificate.head(d);
  res.threshold = -r.certificate[d];
  return res;
}

}  // namespace asymgauge
