#include "core/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace robsel {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Tableau with one extra row for reduced costs and one extra column for the
// right-hand side. T[m][ncols] holds minus the current objective value.
struct Tableau {
  int m = 0;
  int ncols = 0;
  std::vector<double> cells;  // (m + 1) x (ncols + 1)

  double& at(int r, int c) { return cells[static_cast<size_t>(r) * (ncols + 1) + c]; }
  double at(int r, int c) const {
    return cells[static_cast<size_t>(r) * (ncols + 1) + c];
  }

  void pivot(int pr, int pc) {
    const double pv = at(pr, pc);
    for (int c = 0; c <= ncols; ++c) at(pr, c) /= pv;
    for (int r = 0; r <= m; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (std::abs(f) < kEps) {
        at(r, pc) = 0.0;
        continue;
      }
      for (int c = 0; c <= ncols; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
  }
};

// Bland: enter the lowest-index column with a negative reduced cost; leave on
// the minimum ratio, breaking ties by the lowest basic variable index.
// Returns false when no entering column exists (current basis optimal).
// Throws on an unbounded ray via the out-flag.
bool simplex_iterate(Tableau& t, std::vector<int>& basis, int num_pricable,
                     bool* unbounded) {
  *unbounded = false;
  for (;;) {
    int enter = -1;
    for (int c = 0; c < num_pricable; ++c) {
      if (t.at(t.m, c) < -kEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return true;

    int leave = -1;
    double best_ratio = kInf;
    for (int r = 0; r < t.m; ++r) {
      const double a = t.at(r, enter);
      if (a > kEps) {
        const double ratio = t.at(r, t.ncols) / a;
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps &&
             (leave < 0 || basis[static_cast<size_t>(r)] <
                               basis[static_cast<size_t>(leave)]))) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    t.pivot(leave, enter);
    basis[static_cast<size_t>(leave)] = enter;
  }
}

}  // namespace

void LinearProgram::resize(int nv) {
  num_vars = nv;
  objective.assign(static_cast<size_t>(nv), 0.0);
  lower.assign(static_cast<size_t>(nv), 0.0);
  upper.assign(static_cast<size_t>(nv), kInf);
}

void LinearProgram::check_shape() const {
  const auto nv = static_cast<size_t>(num_vars);
  if (objective.size() != nv || lower.size() != nv || upper.size() != nv)
    throw std::invalid_argument("LinearProgram: vector sizes do not match n");
  for (size_t i = 0; i < nv; ++i) {
    if (!std::isfinite(lower[i]))
      throw std::invalid_argument("LinearProgram: lower bounds must be finite");
    if (upper[i] < lower[i])
      throw std::invalid_argument("LinearProgram: upper < lower at variable " +
                                  std::to_string(i));
  }
  for (const auto& row : rows)
    if (row.coeffs.size() != nv)
      throw std::invalid_argument("LinearProgram: row length mismatch");
}

LpResult solve_lp(const LinearProgram& prob) {
  prob.check_shape();
  const int nv = prob.num_vars;

  // Shift every variable by its lower bound so the shifted variables are
  // nonnegative; finite upper bounds become extra <= rows.
  struct SRow {
    std::vector<double> a;
    Relation rel;
    double b;
  };
  std::vector<SRow> rows;
  rows.reserve(prob.rows.size() + static_cast<size_t>(nv));
  for (const auto& row : prob.rows) {
    SRow s{row.coeffs, row.rel, row.rhs};
    for (int i = 0; i < nv; ++i)
      s.b -= row.coeffs[static_cast<size_t>(i)] * prob.lower[static_cast<size_t>(i)];
    rows.push_back(std::move(s));
  }
  for (int i = 0; i < nv; ++i) {
    if (std::isfinite(prob.upper[static_cast<size_t>(i)])) {
      SRow s;
      s.a.assign(static_cast<size_t>(nv), 0.0);
      s.a[static_cast<size_t>(i)] = 1.0;
      s.rel = Relation::le;
      s.b = prob.upper[static_cast<size_t>(i)] - prob.lower[static_cast<size_t>(i)];
      rows.push_back(std::move(s));
    }
  }
  for (auto& row : rows) {
    if (row.b < 0) {
      for (auto& a : row.a) a = -a;
      row.b = -row.b;
      if (row.rel == Relation::le)
        row.rel = Relation::ge;
      else if (row.rel == Relation::ge)
        row.rel = Relation::le;
    }
  }

  const int m = static_cast<int>(rows.size());
  int num_slack = 0, num_art = 0;
  for (const auto& row : rows) {
    if (row.rel != Relation::eq) ++num_slack;
    if (row.rel != Relation::le) ++num_art;
  }
  const int ncols = nv + num_slack + num_art;

  Tableau t;
  t.m = m;
  t.ncols = ncols;
  t.cells.assign(static_cast<size_t>(m + 1) * (ncols + 1), 0.0);
  std::vector<int> basis(static_cast<size_t>(m), -1);

  int slack_at = nv;
  int art_at = nv + num_slack;
  const int art_begin = art_at;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < nv; ++c) t.at(r, c) = rows[static_cast<size_t>(r)].a[static_cast<size_t>(c)];
    t.at(r, ncols) = rows[static_cast<size_t>(r)].b;
    switch (rows[static_cast<size_t>(r)].rel) {
      case Relation::le:
        t.at(r, slack_at) = 1.0;
        basis[static_cast<size_t>(r)] = slack_at++;
        break;
      case Relation::ge:
        t.at(r, slack_at) = -1.0;
        ++slack_at;
        t.at(r, art_at) = 1.0;
        basis[static_cast<size_t>(r)] = art_at++;
        break;
      case Relation::eq:
        t.at(r, art_at) = 1.0;
        basis[static_cast<size_t>(r)] = art_at++;
        break;
    }
  }

  LpResult result;
  bool unbounded = false;

  if (num_art > 0) {
    // Phase 1: minimize the artificial sum.
    for (int c = art_begin; c < ncols; ++c) t.at(m, c) = 1.0;
    for (int r = 0; r < m; ++r) {
      if (basis[static_cast<size_t>(r)] >= art_begin)
        for (int c = 0; c <= ncols; ++c) t.at(m, c) -= t.at(r, c);
    }
    simplex_iterate(t, basis, ncols, &unbounded);
    const double phase1 = -t.at(m, ncols);
    if (phase1 > 1e-7) {
      result.status = LpStatus::infeasible;
      return result;
    }
    // Pivot leftover artificials out of the basis where possible. A row with
    // no eligible pivot is redundant and its artificial stays basic at zero.
    for (int r = 0; r < m; ++r) {
      if (basis[static_cast<size_t>(r)] < art_begin) continue;
      for (int c = 0; c < art_begin; ++c) {
        if (std::abs(t.at(r, c)) > kEps) {
          t.pivot(r, c);
          basis[static_cast<size_t>(r)] = c;
          break;
        }
      }
    }
  }

  // Phase 2 objective row: reduced costs for the shifted problem.
  for (int c = 0; c <= ncols; ++c) t.at(m, c) = 0.0;
  for (int c = 0; c < nv; ++c) t.at(m, c) = prob.objective[static_cast<size_t>(c)];
  for (int r = 0; r < m; ++r) {
    const int b = basis[static_cast<size_t>(r)];
    const double cb = (b < nv) ? prob.objective[static_cast<size_t>(b)] : 0.0;
    if (cb != 0.0)
      for (int c = 0; c <= ncols; ++c) t.at(m, c) -= cb * t.at(r, c);
  }

  // Artificial columns must never re-enter.
  simplex_iterate(t, basis, art_begin, &unbounded);
  if (unbounded) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.primal.assign(static_cast<size_t>(nv), 0.0);
  for (int r = 0; r < m; ++r) {
    const int b = basis[static_cast<size_t>(r)];
    if (b < nv) result.primal[static_cast<size_t>(b)] = t.at(r, ncols);
  }
  double obj = 0.0;
  for (int i = 0; i < nv; ++i) {
    result.primal[static_cast<size_t>(i)] += prob.lower[static_cast<size_t>(i)];
    obj += prob.objective[static_cast<size_t>(i)] * result.primal[static_cast<size_t>(i)];
  }
  result.objective = obj;
  return result;
}

double max_violation(const LinearProgram& prob, const std::vector<double>& x) {
  prob.check_shape();
  if (x.size() != static_cast<size_t>(prob.num_vars))
    throw std::invalid_argument("max_violation: point size mismatch");
  double worst = 0.0;
  for (int i = 0; i < prob.num_vars; ++i) {
    worst = std::max(worst, prob.lower[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]);
    if (std::isfinite(prob.upper[static_cast<size_t>(i)]))
      worst = std::max(worst, x[static_cast<size_t>(i)] - prob.upper[static_cast<size_t>(i)]);
  }
  for (const auto& row : prob.rows) {
    double lhs = 0.0;
    for (int i = 0; i < prob.num_vars; ++i)
      lhs += row.coeffs[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    switch (row.rel) {
      case Relation::le: worst = std::max(worst, lhs - row.rhs); break;
      case Relation::ge: worst = std::max(worst, row.rhs - lhs); break;
      case Relation::eq: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
    }
  }
  return worst;
}

}  // namespace robsel
