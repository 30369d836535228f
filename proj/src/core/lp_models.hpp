#pragma once

#include "core/instance.hpp"
#include "core/simplex.hpp"

namespace robsel {

// Fractional first/second stage masses extracted from an LP point.
struct FractionalPoint {
  std::vector<double> x;                // per item
  std::vector<std::vector<double>> y;   // per scenario, per item
};

// Budget-feasibility program for a discrete two-stage instance at level L.
// Variable layout: x_e at column e, y^S_e at column n + S*n + e. Items whose
// cost exceeds L (outside the support sets) are pinned to zero through their
// bounds. Row order: one budget row per scenario, one cardinality row per
// scenario, then the pairing rows x_e + y^S_e <= 1 grouped by scenario.
LinearProgram build_lp_L(const Instance& inst, double L);

enum class LStarMode {
  // Walk the support breakpoints (the distinct cost values); inside a window
  // the supports are constant, so minimizing L as an LP variable gives the
  // exact answer with no tolerance artifacts.
  exact_breakpoints,
  // Plain bisection to 1e-6 * c_max, kept for fidelity experiments.
  binary_search,
};

struct LStarResult {
  double l_star = 0.0;
  FractionalPoint fractional;
};

// Smallest L for which build_lp_L(inst, L) is feasible, plus a feasible
// fractional point at that level.
LStarResult find_L_star(const Instance& inst,
                        LStarMode mode = LStarMode::exact_breakpoints);

// LP relaxation of the recoverable-selection integer program for an interval
// instance: variables x_i, y_i, z_i in [0,1] (columns i, n+i, 2n+i), the two
// cardinality equalities, the z-sum inequality and the 2n pairing rows. The
// constraint matrix is totally unimodular, so the optimum is integral and
// equals the exact recoverable objective.
LinearProgram build_mip3_relaxation(const Instance& inst);

}  // namespace robsel
