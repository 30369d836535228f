#include "core/lp_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "core/errors.hpp"

namespace robsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Cost max_cost(const Instance& inst) {
  Cost cmax = 0;
  for (Cost c : inst.first_stage) cmax = std::max(cmax, c);
  for (int s = 0; s < inst.scenario_count(); ++s)
    for (Cost c : inst.scenario_costs(s)) cmax = std::max(cmax, c);
  return cmax;
}

void require_discrete_two_stage(const Instance& inst, const char* who) {
  if (!inst.is_discrete())
    throw MethodMismatchError(std::string(who) +
                              ": needs a discrete-scenario instance");
}

// Shared builder. When l_column is true an extra variable L is appended after
// the y block and each budget row becomes sum - L <= 0; supports are frozen
// at support_level.
LinearProgram build_lp_L_impl(const Instance& inst, double support_level,
                              bool l_column, double l_lower) {
  require_discrete_two_stage(inst, "build_lp_L");
  const int n = inst.n();
  const int K = inst.scenario_count();
  const int nv = n + n * K + (l_column ? 1 : 0);
  const int lcol = n + n * K;

  LinearProgram lp;
  lp.resize(nv);
  for (int e = 0; e < n; ++e)
    if (static_cast<double>(inst.first_stage[static_cast<size_t>(e)]) >
        support_level)
      lp.upper[static_cast<size_t>(e)] = 0.0;
  for (int s = 0; s < K; ++s) {
    auto costs = inst.scenario_costs(s);
    for (int e = 0; e < n; ++e)
      if (static_cast<double>(costs[static_cast<size_t>(e)]) > support_level)
        lp.upper[static_cast<size_t>(n + s * n + e)] = 0.0;
  }
  if (l_column) {
    lp.lower[static_cast<size_t>(lcol)] = l_lower;
    lp.objective[static_cast<size_t>(lcol)] = 1.0;
  }

  // Budget rows.
  for (int s = 0; s < K; ++s) {
    LpRow row;
    row.coeffs.assign(static_cast<size_t>(nv), 0.0);
    auto costs = inst.scenario_costs(s);
    for (int e = 0; e < n; ++e) {
      row.coeffs[static_cast<size_t>(e)] =
          static_cast<double>(inst.first_stage[static_cast<size_t>(e)]);
      row.coeffs[static_cast<size_t>(n + s * n + e)] =
          static_cast<double>(costs[static_cast<size_t>(e)]);
    }
    row.rel = Relation::le;
    if (l_column) {
      row.coeffs[static_cast<size_t>(lcol)] = -1.0;
      row.rhs = 0.0;
    } else {
      row.rhs = support_level;
    }
    lp.rows.push_back(std::move(row));
  }
  // Cardinality rows.
  for (int s = 0; s < K; ++s) {
    LpRow row;
    row.coeffs.assign(static_cast<size_t>(nv), 0.0);
    for (int e = 0; e < n; ++e) {
      row.coeffs[static_cast<size_t>(e)] = 1.0;
      row.coeffs[static_cast<size_t>(n + s * n + e)] = 1.0;
    }
    row.rel = Relation::eq;
    row.rhs = static_cast<double>(inst.p);
    lp.rows.push_back(std::move(row));
  }
  // Pairing rows, scenario-major.
  for (int s = 0; s < K; ++s) {
    for (int e = 0; e < n; ++e) {
      LpRow row;
      row.coeffs.assign(static_cast<size_t>(nv), 0.0);
      row.coeffs[static_cast<size_t>(e)] = 1.0;
      row.coeffs[static_cast<size_t>(n + s * n + e)] = 1.0;
      row.rel = Relation::le;
      row.rhs = 1.0;
      lp.rows.push_back(std::move(row));
    }
  }
  return lp;
}

FractionalPoint extract_point(const Instance& inst,
                              const std::vector<double>& primal) {
  const int n = inst.n();
  const int K = inst.scenario_count();
  FractionalPoint pt;
  pt.x.assign(primal.begin(), primal.begin() + n);
  pt.y.resize(static_cast<size_t>(K));
  for (int s = 0; s < K; ++s)
    pt.y[static_cast<size_t>(s)].assign(primal.begin() + n + s * n,
                                        primal.begin() + n + (s + 1) * n);
  return pt;
}

}  // namespace

LinearProgram build_lp_L(const Instance& inst, double L) {
  return build_lp_L_impl(inst, L, /*l_column=*/false, 0.0);
}

LStarResult find_L_star(const Instance& inst, LStarMode mode) {
  require_discrete_two_stage(inst, "find_L_star");
  require_valid(inst);
  const int n = inst.n();
  const Cost cmax = max_cost(inst);

  if (mode == LStarMode::binary_search) {
    auto feasible = [&](double L) {
      return solve_lp(build_lp_L(inst, L)).status == LpStatus::optimal;
    };
    double hi = static_cast<double>(n - 1) * static_cast<double>(cmax);
    if (feasible(0.0)) {
      auto res = solve_lp(build_lp_L(inst, 0.0));
      return {0.0, extract_point(inst, res.primal)};
    }
    if (!feasible(hi))
      throw std::logic_error("find_L_star: infeasible at (n-1)*c_max");
    const double tol = 1e-6 * std::max<double>(1.0, static_cast<double>(cmax));
    double lo = 0.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (feasible(mid))
        hi = mid;
      else
        lo = mid;
    }
    auto res = solve_lp(build_lp_L(inst, hi));
    return {hi, extract_point(inst, res.primal)};
  }

  // Exact mode: the supports change only at cost values, so scan the windows
  // between consecutive breakpoints with L as a variable.
  std::set<Cost> values;
  for (Cost c : inst.first_stage) values.insert(c);
  for (int s = 0; s < inst.scenario_count(); ++s)
    for (Cost c : inst.scenario_costs(s)) values.insert(c);
  std::vector<Cost> breakpoints(values.begin(), values.end());

  for (size_t w = 0; w < breakpoints.size(); ++w) {
    const double lo = static_cast<double>(breakpoints[w]);
    const double hi = (w + 1 < breakpoints.size())
                          ? static_cast<double>(breakpoints[w + 1])
                          : kInf;
    LinearProgram lp = build_lp_L_impl(inst, lo, /*l_column=*/true, lo);
    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal) continue;
    const double l_opt = res.objective;
    if (l_opt < hi) return {l_opt, extract_point(inst, res.primal)};
    // The optimum escaped the window; larger supports can only do better.
  }
  throw std::logic_error("find_L_star: no feasible breakpoint window");
}

LinearProgram build_mip3_relaxation(const Instance& inst) {
  if (!inst.is_interval() || !inst.k)
    throw MethodMismatchError(
        "build_mip3_relaxation: needs an interval instance with k");
  const int n = inst.n();
  const auto& upper = inst.interval().upper;

  LinearProgram lp;
  lp.resize(3 * n);
  for (int i = 0; i < 3 * n; ++i) lp.upper[static_cast<size_t>(i)] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double ci = static_cast<double>(inst.first_stage[static_cast<size_t>(i)]);
    const double ui = static_cast<double>(upper[static_cast<size_t>(i)]);
    lp.objective[static_cast<size_t>(i)] = ci;
    lp.objective[static_cast<size_t>(n + i)] = ui;
    lp.objective[static_cast<size_t>(2 * n + i)] = ci + ui;
  }

  auto sum_row = [&](int first, int second, Relation rel, double rhs) {
    LpRow row;
    row.coeffs.assign(static_cast<size_t>(3 * n), 0.0);
    for (int i = 0; i < n; ++i) {
      row.coeffs[static_cast<size_t>(first + i)] = 1.0;
      if (second >= 0) row.coeffs[static_cast<size_t>(second + i)] = 1.0;
    }
    row.rel = rel;
    row.rhs = rhs;
    lp.rows.push_back(std::move(row));
  };
  sum_row(0, 2 * n, Relation::eq, static_cast<double>(inst.p));
  sum_row(n, 2 * n, Relation::eq, static_cast<double>(inst.p));
  sum_row(2 * n, -1, Relation::ge, static_cast<double>(inst.p - *inst.k));
  for (int i = 0; i < n; ++i) {
    LpRow row;
    row.coeffs.assign(static_cast<size_t>(3 * n), 0.0);
    row.coeffs[static_cast<size_t>(i)] = 1.0;
    row.coeffs[static_cast<size_t>(2 * n + i)] = 1.0;
    row.rel = Relation::le;
    row.rhs = 1.0;
    lp.rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    LpRow row;
    row.coeffs.assign(static_cast<size_t>(3 * n), 0.0);
    row.coeffs[static_cast<size_t>(n + i)] = 1.0;
    row.coeffs[static_cast<size_t>(2 * n + i)] = 1.0;
    row.rel = Relation::le;
    row.rhs = 1.0;
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

}  // namespace robsel
