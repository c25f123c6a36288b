#include "asymgauge/simplex.hpp"

#include <stdexcept>

namespace asymgauge {

void LPProblem::validate() const {
  const Index m = A.rows(), n = A.cols();
  if (m < 1 || n < 1) throw DimensionMismatch("lp: empty problem");
  if (c.size() != n) throw DimensionMismatch("lp: objective length");
  if (b.size() != m) throw DimensionMismatch("lp: rhs length");
  if (static_cast<Index>(sense.size()) != m)
    throw DimensionMismatch("lp: sense length");
  if (static_cast<Index>(lower.size()) != n)
    throw DimensionMismatch("lp: bound length");
}

namespace {

// Standard-form layout: one column per bounded variable, two per free
// variable, one slack per inequality row, one artificial per row.  Rows are
// sign-normalized so the right-hand side is nonnegative and the artificials
// form the initial basis.  Row m of T holds the reduced costs and is kept
// current by every pivot.
struct Standard {
  RatMatrix T;               // (m+1) x (ncols + 1), last column = rhs
  std::vector<Index> basis;  // column index of the basic variable per row
  Index m = 0;
  Index n_real = 0;          // real columns (vars + slacks)
  Index art0 = 0;            // first artificial column
  std::vector<Index> var_col;   // per orig var: its column (bounded/free+)
  std::vector<Index> var_neg;   // per orig var: the minus column, -1 if bounded
  std::vector<Rational> sigma;  // per row: +1/-1 normalization
  std::vector<bool> banned;     // columns forbidden from entering

  void load_costs(const std::vector<Rational>& cost) {
    const Index ncols = static_cast<Index>(banned.size());
    for (Index j = 0; j <= ncols; ++j) {
      Rational red = j < ncols ? cost[static_cast<std::size_t>(j)] : Rational(0);
      for (Index i = 0; i < m; ++i) {
        const Rational& cb =
            cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])];
        if (!cb.is_zero() && !T(i, j).is_zero()) red -= cb * T(i, j);
      }
      T(m, j) = std::move(red);
    }
  }
};

Standard build_standard(const LPProblem& p) {
  const Index m = p.rows(), n = p.cols();
  Standard s;
  s.m = m;
  s.var_col.resize(static_cast<std::size_t>(n));
  s.var_neg.assign(static_cast<std::size_t>(n), -1);
  s.sigma.assign(static_cast<std::size_t>(m), Rational(1));

  Index ncols = 0;
  for (Index j = 0; j < n; ++j) {
    s.var_col[static_cast<std::size_t>(j)] = ncols++;
    if (!p.lower[static_cast<std::size_t>(j)])
      s.var_neg[static_cast<std::size_t>(j)] = ncols++;
  }
  std::vector<Index> slack_col(static_cast<std::size_t>(m), -1);
  for (Index i = 0; i < m; ++i)
    if (p.sense[static_cast<std::size_t>(i)] != Sense::EQ)
      slack_col[static_cast<std::size_t>(i)] = ncols++;
  s.n_real = ncols;
  s.art0 = ncols;
  ncols += m;

  s.T = RatMatrix::Constant(m + 1, ncols + 1, Rational(0));
  for (Index i = 0; i < m; ++i) {
    Rational rhs = p.b[i];
    for (Index j = 0; j < n; ++j)
      if (const auto& lo = p.lower[static_cast<std::size_t>(j)])
        rhs -= p.A(i, j) * *lo;

    for (Index j = 0; j < n; ++j) {
      const Rational& a = p.A(i, j);
      if (a.is_zero()) continue;
      s.T(i, s.var_col[static_cast<std::size_t>(j)]) = a;
      if (s.var_neg[static_cast<std::size_t>(j)] >= 0)
        s.T(i, s.var_neg[static_cast<std::size_t>(j)]) = -a;
    }
    if (p.sense[static_cast<std::size_t>(i)] == Sense::LE)
      s.T(i, slack_col[static_cast<std::size_t>(i)]) = Rational(1);
    else if (p.sense[static_cast<std::size_t>(i)] == Sense::GE)
      s.T(i, slack_col[static_cast<std::size_t>(i)]) = Rational(-1);

    if (rhs < Rational(0)) {
      s.sigma[static_cast<std::size_t>(i)] = Rational(-1);
      s.T.row(i) = -s.T.row(i);
      rhs = -rhs;
    }
    s.T(i, s.art0 + i) = Rational(1);
    s.T(i, ncols) = rhs;
  }
  s.basis.resize(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i)
    s.basis[static_cast<std::size_t>(i)] = s.art0 + i;
  s.banned.assign(static_cast<std::size_t>(ncols), false);
  return s;
}

void pivot(Standard& s, Index row, Index col) {
  s.T.row(row) /= s.T(row, col);
  for (Index i = 0; i <= s.m; ++i) {  // includes the reduced-cost row
    if (i == row || s.T(i, col).is_zero()) continue;
    s.T.row(i) -= s.T(i, col) * s.T.row(row);
  }
  s.basis[static_cast<std::size_t>(row)] = col;
}

// Bland's rule: enter the lowest-index improving column, leave by minimum
// ratio with ties broken by lowest basic column index.  Returns the entering
// column of an unbounded direction, or -1 at optimality.  Assumes the
// reduced-cost row is loaded for the active cost vector.
Index run_simplex(Standard& s) {
  const Index m = s.m, ncols = static_cast<Index>(s.banned.size());
  const Index rhs = ncols;
  for (;;) {
    Index enter = -1;
    for (Index j = 0; j < ncols && enter < 0; ++j) {
      if (s.banned[static_cast<std::size_t>(j)]) continue;
      if (s.T(m, j) < Rational(0)) enter = j;
    }
    if (enter < 0) return -1;

    Index leave = -1;
    Rational best;
    for (Index i = 0; i < m; ++i) {
      if (!(s.T(i, enter) > Rational(0))) continue;
      Rational ratio = s.T(i, rhs) / s.T(i, enter);
      const bool better =
          leave < 0 || ratio < best ||
          (ratio == best && s.basis[static_cast<std::size_t>(i)] <
                                s.basis[static_cast<std::size_t>(leave)]);
      if (better) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return enter;  // unbounded direction

    const Index leaving_col = s.basis[static_cast<std::size_t>(leave)];
    if (leaving_col >= s.art0) s.banned[static_cast<std::size_t>(leaving_col)] = true;
    pivot(s, leave, enter);
  }
}

RatVector standard_duals(const Standard& s, const std::vector<Rational>& cost) {
  const Index m = s.m;
  RatVector y = RatVector::Constant(m, Rational(0));
  for (Index i = 0; i < m; ++i) {
    Rational acc(0);
    for (Index k = 0; k < m; ++k) {
      const Rational& cb = cost[static_cast<std::size_t>(
          s.basis[static_cast<std::size_t>(k)])];
      if (!cb.is_zero() && !s.T(k, s.art0 + i).is_zero())
        acc += cb * s.T(k, s.art0 + i);
    }
    y[i] = acc * s.sigma[static_cast<std::size_t>(i)];
  }
  return y;
}

RatVector recover_x(const LPProblem& p, const Standard& s) {
  const Index m = s.m, n = p.cols();
  const Index rhs = static_cast<Index>(s.banned.size());
  RatVector z = RatVector::Constant(rhs, Rational(0));
  for (Index i = 0; i < m; ++i)
    z[s.basis[static_cast<std::size_t>(i)]] = s.T(i, rhs);
  RatVector x(n);
  for (Index j = 0; j < n; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    Rational v = z[s.var_col[sj]];
    if (s.var_neg[sj] >= 0) v -= z[s.var_neg[sj]];
    if (const auto& lo = p.lower[sj]) v += *lo;
    x[j] = v;
  }
  return x;
}

}  // namespace

LPResult lp_solve(const LPProblem& p) {
  p.validate();
  const Index m = p.rows(), n = p.cols();
  Standard s = build_standard(p);
  const Index ncols = static_cast<Index>(s.banned.size());

  std::vector<Rational> phase1(static_cast<std::size_t>(ncols), Rational(0));
  for (Index i = 0; i < m; ++i)
    phase1[static_cast<std::size_t>(s.art0 + i)] = Rational(1);
  s.load_costs(phase1);
  Index dir = run_simplex(s);
  if (dir >= 0) throw std::logic_error("lp: phase-1 objective unbounded");

  Rational infeas(0);
  for (Index i = 0; i < m; ++i)
    if (s.basis[static_cast<std::size_t>(i)] >= s.art0)
      infeas += s.T(i, ncols);

  LPResult res;
  if (!infeas.is_zero()) {
    res.status = LPStatus::Infeasible;
    res.certificate = standard_duals(s, phase1);
    if (!lp_verify(p, res))
      throw std::logic_error("lp: Farkas certificate recheck failed");
    return res;
  }

  // Drive artificials out of the basis; rows that cannot release one are
  // redundant combinations and stay inert with the artificial pinned at 0.
  for (Index i = 0; i < m; ++i) {
    if (s.basis[static_cast<std::size_t>(i)] < s.art0) continue;
    for (Index j = 0; j < s.n_real; ++j)
      if (!s.T(i, j).is_zero()) {
        pivot(s, i, j);
        break;
      }
  }
  for (Index a = s.art0; a < s.art0 + m; ++a)
    s.banned[static_cast<std::size_t>(a)] = true;

  std::vector<Rational> phase2(static_cast<std::size_t>(ncols), Rational(0));
  for (Index j = 0; j < n; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    phase2[static_cast<std::size_t>(s.var_col[sj])] = p.c[j];
    if (s.var_neg[sj] >= 0)
      phase2[static_cast<std::size_t>(s.var_neg[sj])] = -p.c[j];
  }
  s.load_costs(phase2);
  dir = run_simplex(s);

  if (dir >= 0) {
    res.status = LPStatus::Unbounded;
    res.x = recover_x(p, s);
    RatVector dz = RatVector::Constant(ncols, Rational(0));
    dz[dir] = Rational(1);
    for (Index i = 0; i < m; ++i)
      dz[s.basis[static_cast<std::size_t>(i)]] = -s.T(i, dir);
    RatVector ray(n);
    for (Index j = 0; j < n; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      Rational v = dz[s.var_col[sj]];
      if (s.var_neg[sj] >= 0) v -= dz[s.var_neg[sj]];
      ray[j] = v;
    }
    res.certificate = ray;
    if (!lp_verify(p, res))
      throw std::logic_error("lp: ray certificate recheck failed");
    return res;
  }

  res.status = LPStatus::Optimal;
  res.x = recover_x(p, s);
  res.objective = p.c.dot(res.x);
  res.certificate = standard_duals(s, phase2);
  if (!lp_verify(p, res)) throw std::logic_error("lp: certificate recheck failed");
  return res;
}

bool lp_verify(const LPProblem& p, const LPResult& r) {
  const Index m = p.rows(), n = p.cols();
  const Rational zero(0);

  auto feasible = [&](const RatVector& x) {
    if (x.size() != n) return false;
    for (Index j = 0; j < n; ++j)
      if (const auto& lo = p.lower[static_cast<std::size_t>(j)])
        if (x[j] < *lo) return false;
    for (Index i = 0; i < m; ++i) {
      const Rational lhs = p.A.row(i).dot(x.transpose());
      switch (p.sense[static_cast<std::size_t>(i)]) {
        case Sense::LE:
          if (lhs > p.b[i]) return false;
          break;
        case Sense::GE:
          if (lhs < p.b[i]) return false;
          break;
        case Sense::EQ:
          if (lhs != p.b[i]) return false;
          break;
      }
    }
    return true;
  };
  auto dual_signs_ok = [&](const RatVector& y) {
    if (y.size() != m) return false;
    for (Index i = 0; i < m; ++i) {
      if (p.sense[static_cast<std::size_t>(i)] == Sense::LE && y[i] > zero)
        return false;
      if (p.sense[static_cast<std::size_t>(i)] == Sense::GE && y[i] < zero)
        return false;
    }
    return true;
  };

  switch (r.status) {
    case LPStatus::Optimal: {
      if (!feasible(r.x)) return false;
      if (!dual_signs_ok(r.certificate)) return false;
      const RatVector& y = r.certificate;
      Rational dual_obj = y.dot(p.b);
      for (Index j = 0; j < n; ++j) {
        Rational w(0);
        for (Index i = 0; i < m; ++i)
          if (!y[i].is_zero()) w += y[i] * p.A(i, j);
        const Rational z = p.c[j] - w;
        if (const auto& lo = p.lower[static_cast<std::size_t>(j)]) {
          if (z < zero) return false;
          dual_obj += z * *lo;
        } else if (!z.is_zero()) {
          return false;
        }
      }
      const Rational primal_obj = p.c.dot(r.x);
      return primal_obj == dual_obj && r.objective == primal_obj;
    }
    case LPStatus::Infeasible: {
      const RatVector& y = r.certificate;
      if (!dual_signs_ok(y)) return false;
      Rational value = y.dot(p.b);
      for (Index j = 0; j < n; ++j) {
        Rational w(0);
        for (Index i = 0; i < m; ++i)
          if (!y[i].is_zero()) w += y[i] * p.A(i, j);
        if (const auto& lo = p.lower[static_cast<std::size_t>(j)]) {
          if (w > zero) return false;
          value -= w * *lo;
        } else if (!w.is_zero()) {
          return false;
        }
      }
      return value > zero;
    }
    case LPStatus::Unbounded: {
      if (!feasible(r.x)) return false;
      const RatVector& d = r.certificate;
      if (d.size() != n) return false;
      for (Index j = 0; j < n; ++j)
        if (p.lower[static_cast<std::size_t>(j)] && d[j] < zero) return false;
      for (Index i = 0; i < m; ++i) {
        const Rational along = p.A.row(i).dot(d.transpose());
        switch (p.sense[static_cast<std::size_t>(i)]) {
          case Sense::LE:
            if (along > zero) return false;
            break;
          case Sense::GE:
            if (along < zero) return false;
            break;
          case Sense::EQ:
            if (!along.is_zero()) return false;
            break;
        }
      }
      return p.c.dot(d) < zero;
    }
  }
  return false;
}

}  // namespace asymgauge
