#pragma once

#include <string>

#include "core/instance.hpp"

namespace robsel {

// State of the parametric run: a multiplier theta and three pairwise
// disjoint sets. ex holds the items bought only first stage, ey the items
// bought only second stage, ez the items kept across both stages, so
// |ex| == |ey| == p - |ez| throughout.
struct LagrangianState {
  Cost theta = 0;
  ItemSet ex;
  ItemSet ey;
  ItemSet ez;
};

enum class CondKind { tcon1, tcon2, tcon3, tcon4 };

const char* cond_kind_name(CondKind kind);

// Inequality instance that attains the smallest slack. Unused witness slots
// stay -1:
//   tcon1: i in ex, j in ey, u outside everything
//   tcon2: u in ex, j in ey
//   tcon3: i in ex, u in ey
//   tcon4: l in ex, m in ey, r in ez
struct BindingCondition {
  CondKind kind = CondKind::tcon1;
  int i = -1, j = -1, u = -1, l = -1, m = -1, r = -1;
};

struct ThresholdResult {
  Cost theta_next = 0;
  BindingCondition binding;
};

// Optimum of the relaxed problem at theta = 0: take the p cheapest items per
// stage independently and split them into the three sets.
LagrangianState initial_partition(const Instance& inst);

// Relaxed objective: sum(ex, C) + sum(ey, upper) + sum(ez, C+upper-theta)
// + (p-k)*theta.
Cost phi(const LagrangianState& state, const Instance& inst);

// Largest theta for which the state stays optimal, found by scanning every
// inequality of the four condition families (the two-witness families are
// enumerated pairwise; the third witness of tcon1/tcon4 is the precomputed
// extreme item). Ties resolve by condition kind then lexicographic witnesses.
// Requires |ez| < p - k.
ThresholdResult min_threshold(const LagrangianState& state,
                              const Instance& inst);

// Zero-cost exchange step for a binding condition: one item enters ez and the
// paired witnesses leave ex/ey (tcon4 swaps two in, one out). Grows |ez| by
// exactly one and keeps phi unchanged; both are checked and a violation
// throws std::logic_error rather than repairing silently.
LagrangianState apply_transformation(const LagrangianState& state,
                                     const BindingCondition& binding,
                                     const Instance& inst);

// Structure + optimality check used by tests: Property-1 shape and all four
// condition families satisfied at state.theta. Throws std::logic_error.
void check_state(const LagrangianState& state, const Instance& inst);

struct RecSolveOptions {
  bool trace = false;  // one stats line per transformation
};

// Exact solver for recoverable selection under interval uncertainty: start
// from the theta = 0 partition and raise theta through binding conditions,
// applying one exchange per step, until |ez| reaches p - k. Runs in
// O((p-k+1) n^2): at most p-k exchanges, each preceded by a scan of the
// O(n^2) inequalities.
Solution solve_recoverable_interval(const Instance& inst,
                                    const RecSolveOptions& options = {});

}  // namespace robsel
