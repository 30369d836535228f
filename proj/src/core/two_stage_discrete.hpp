#pragma once

#include <cstdint>
#include <vector>

#include "core/instance.hpp"
#include "core/lp_models.hpp"
#include "core/rng.hpp"

namespace robsel {

struct RoundingParams {
  int t_hat = 0;        // 0 derives ceil(32 ln n + 8 ln 2K) from the instance
  int retries = 10;     // attempts before giving up
  std::uint64_t seed = 1;
  bool per_round_stats = false;  // simulate the rounds one by one
  LStarMode lstar_mode = LStarMode::exact_breakpoints;
};

int compute_t_hat(int n, int num_scenarios);

struct RoundedSets {
  ItemSet x;
  std::vector<ItemSet> y;  // one set per scenario
  // Items still to select per scenario after each round (index 0 = before
  // round one); filled only in per-round mode.
  std::vector<std::vector<int>> p_series;
};

// Randomized rounding of a fractional point. Each item joins X with
// probability 1 - (1 - x_e)^t_hat, each (item, scenario) pair joins Y^S with
// probability 1 - (1 - y_e^S)^t_hat. The default mode samples one Bernoulli
// per variable; per-round mode plays the t_hat coin rounds out so the
// contraction of the unselected pool can be observed. Draws consume the
// stream in a fixed order (items ascending, then scenario-major), so a seed
// pins the outcome. Throws std::invalid_argument when a probability lies
// outside [0, 1].
RoundedSets randomized_round(const FractionalPoint& fractional, int t_hat,
                             int p, Rng& rng, bool per_round_stats);

struct RepairOutcome {
  bool feasible = false;
  ItemSet x;
  std::vector<ItemSet> completions;  // optimal completion of x per scenario
  Cost objective = 0;
  std::vector<int> failed_scenarios;
  int items_added = 0;
};

// Turns rounded sets into a feasible solution: tops X up with at most 4
// still-unselected items (cheapest first-stage cost first, and only as many
// as the worst scenario is short), reports failure when a scenario stays
// short, trims X to p dropping the most expensive items, removes duplicates
// and per-scenario surplus (most expensive under that scenario first), and
// prices the result with the optimal completion of X under each scenario.
RepairOutcome repair(const ItemSet& x, const std::vector<ItemSet>& y,
                     const Instance& inst);

// LP rounding end to end: find the minimal feasible budget L*, round the
// fractional point, repair; retry with fresh randomness on failure. Throws
// RoundingFailedError when every attempt fails. With L* = 0 the zero-cost
// integral solution is returned directly.
Solution solve_two_stage_discrete(const Instance& inst,
                                  const RoundingParams& params = {});

}  // namespace robsel
