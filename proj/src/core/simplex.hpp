#pragma once

#include <vector>

namespace robsel {

enum class Relation { le, eq, ge };

struct LpRow {
  std::vector<double> coeffs;
  Relation rel = Relation::le;
  double rhs = 0.0;
};

// Small dense LP in inequality form, minimized. Per-variable bounds must have
// a finite lower bound; the upper bound may be +infinity.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;

  void resize(int nv);
  void check_shape() const;  // throws std::invalid_argument on a mismatch
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  std::vector<double> primal;
};

// Two-phase dense tableau simplex with Bland's rule, so pivoting is both
// cycle-free and deterministic.
LpResult solve_lp(const LinearProgram& prob);

// Largest constraint/bound violation of x (tests pin this below 1e-9).
double max_violation(const LinearProgram& prob, const std::vector<double>& x);

}  // namespace robsel
