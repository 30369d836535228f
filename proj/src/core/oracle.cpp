#include "core/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"

namespace robsel {

namespace {

constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

void check_shape(const Instance& inst, const OracleLimits& limits,
                 bool full_first_stage) {
  const int n = inst.n();
  if (n < 1) throw InvalidInstanceError("oracle: empty instance", {"instance has no items"});
  if (inst.p < 1 || inst.p > n)
    throw InvalidInstanceError("oracle: p out of range", {"p out of range"});
  if (full_first_stage) {
    if (!inst.k) throw MethodMismatchError("exact_recoverable: needs k");
    if (*inst.k < 0 || *inst.k > inst.p)
      throw InvalidInstanceError("oracle: k out of range", {"k out of range"});
  }
  for (int s = 0; s < inst.scenario_count(); ++s)
    if (static_cast<int>(inst.scenario_costs(s).size()) != n)
      throw InvalidInstanceError("oracle: ragged scenario",
                                 {"scenario length mismatch"});
  if (n > limits.max_items)
    throw CapExceededError("oracle: " + std::to_string(n) +
                           " items exceed the cap of " +
                           std::to_string(limits.max_items));
  if (n > 62)
    throw CapExceededError("oracle: bitmask enumeration handles at most 62 items");
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

// Bitmask combination walk (Gosper); n is capped well below 64 by the limits.
std::uint64_t next_combination(std::uint64_t s) {
  const std::uint64_t c = s & (~s + 1);
  const std::uint64_t r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

struct ScenarioOrder {
  std::vector<std::vector<int>> order;  // per scenario, items by (cost, index)

  explicit ScenarioOrder(const Instance& inst) {
    const int n = inst.n();
    order.resize(static_cast<size_t>(inst.scenario_count()));
    for (int s = 0; s < inst.scenario_count(); ++s) {
      auto costs = inst.scenario_costs(s);
      auto& ord = order[static_cast<size_t>(s)];
      ord.resize(static_cast<size_t>(n));
      std::iota(ord.begin(), ord.end(), 0);
      std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        return costs[static_cast<size_t>(a)] < costs[static_cast<size_t>(b)];
      });
    }
  }
};

// Cost of the cheapest (p - |X|)-completion of the mask under scenario s.
Cost completion_value(const Instance& inst, const ScenarioOrder& so, int s,
                      std::uint64_t mask, int mask_size) {
  auto costs = inst.scenario_costs(s);
  int need = inst.p - mask_size;
  Cost total = 0;
  for (int e : so.order[static_cast<size_t>(s)]) {
    if (need == 0) break;
    if (mask & (1ull << e)) continue;
    total += costs[static_cast<size_t>(e)];
    --need;
  }
  return total;
}

// Cheapest recovery value for the mask (|mask| = p) under scenario s: keep
// the (p - j) cheapest selected items, add the j cheapest outside items, best
// j in 0..k.
Cost recovery_value(const Instance& inst, const ScenarioOrder& so, int s,
                    std::uint64_t mask) {
  auto costs = inst.scenario_costs(s);
  const int p = inst.p;
  const int k = *inst.k;
  // Scratch buffers persist across the (huge) enumeration.
  static thread_local std::vector<Cost> pref_in;
  static thread_local std::vector<Cost> pref_out;
  pref_in.clear();
  pref_out.clear();
  pref_in.push_back(0);
  pref_out.push_back(0);
  for (int e : so.order[static_cast<size_t>(s)]) {
    if (mask & (1ull << e)) {
      if (static_cast<int>(pref_in.size()) <= p)
        pref_in.push_back(pref_in.back() + costs[static_cast<size_t>(e)]);
    } else if (static_cast<int>(pref_out.size()) <= k) {
      pref_out.push_back(pref_out.back() + costs[static_cast<size_t>(e)]);
    }
  }
  Cost best = kInfCost;
  const int max_swaps = std::min<int>(k, static_cast<int>(pref_out.size()) - 1);
  for (int j = 0; j <= max_swaps; ++j)
    best = std::min(best, pref_in[static_cast<size_t>(p - j)] +
                              pref_out[static_cast<size_t>(j)]);
  return best;
}

ItemSet mask_to_set(std::uint64_t mask, int n) {
  ItemSet out;
  for (int e = 0; e < n; ++e)
    if (mask & (1ull << e)) out.push_back(e);
  return out;
}

}  // namespace

Solution exact_two_stage(const Instance& inst, const OracleLimits& limits) {
  check_shape(inst, limits, /*full_first_stage=*/false);
  if (inst.k) throw MethodMismatchError("exact_two_stage: instance carries k");
  const int n = inst.n();
  const int K = inst.scenario_count();

  std::uint64_t work = 0;
  for (int j = 0; j <= inst.p; ++j) {
    work += binomial_capped(n, j, limits.max_subsets);
    if (work > limits.max_subsets)
      throw CapExceededError("exact_two_stage: subset count exceeds the cap");
  }

  ScenarioOrder so(inst);
  Cost best = kInfCost;
  std::uint64_t best_mask = 0;

  for (int size = 0; size <= inst.p; ++size) {
    std::uint64_t mask = (size == 0) ? 0 : (1ull << size) - 1;
    const std::uint64_t end = 1ull << n;
    for (;;) {
      Cost first = 0;
      for (int e = 0; e < n; ++e)
        if (mask & (1ull << e)) first += inst.first_stage[static_cast<size_t>(e)];
      if (first < best) {
        Cost worst = 0;
        for (int s = 0; s < K && worst < best; ++s)
          worst = std::max(worst,
                           first + completion_value(inst, so, s, mask, size));
        if (worst < best) {
          best = worst;
          best_mask = mask;
        }
      }
      if (size == 0) break;
      mask = next_combination(mask);
      if (mask >= end) break;
    }
  }

  Solution sol;
  sol.method = "oracle";
  sol.first_stage = mask_to_set(best_mask, n);
  Cost objective = 0;
  const Cost first = evaluate_cost(sol.first_stage, inst.first_stage);
  for (int s = 0; s < K; ++s) {
    PickResult pick = best_completion(sol.first_stage, inst.scenario_costs(s), inst.p);
    objective = std::max(objective, first + pick.value);
    sol.per_scenario[inst.scenario_id(s)] = std::move(pick.items);
  }
  sol.objective = objective;
  sol.stats["variant"] = "two-stage";
  return sol;
}

Solution exact_recoverable(const Instance& inst, const OracleLimits& limits) {
  check_shape(inst, limits, /*full_first_stage=*/true);
  const int n = inst.n();
  const int K = inst.scenario_count();
  if (binomial_capped(n, inst.p, limits.max_subsets) > limits.max_subsets)
    throw CapExceededError("exact_recoverable: subset count exceeds the cap");

  ScenarioOrder so(inst);
  Cost best = kInfCost;
  std::uint64_t best_mask = 0;

  std::uint64_t mask = (1ull << inst.p) - 1;
  const std::uint64_t end = 1ull << n;
  for (;;) {
    Cost first = 0;
    for (int e = 0; e < n; ++e)
      if (mask & (1ull << e)) first += inst.first_stage[static_cast<size_t>(e)];
    if (first < best) {
      Cost worst = 0;
      for (int s = 0; s < K && worst < best; ++s)
        worst = std::max(worst, first + recovery_value(inst, so, s, mask));
      if (worst < best) {
        best = worst;
        best_mask = mask;
      }
    }
    mask = next_combination(mask);
    if (mask >= end) break;
  }

  Solution sol;
  sol.method = "oracle";
  sol.first_stage = mask_to_set(best_mask, n);
  Cost objective = 0;
  const Cost first = evaluate_cost(sol.first_stage, inst.first_stage);
  for (int s = 0; s < K; ++s) {
    PickResult pick =
        best_recovery(sol.first_stage, inst.scenario_costs(s), inst.p, *inst.k);
    objective = std::max(objective, first + pick.value);
    sol.per_scenario[inst.scenario_id(s)] = std::move(pick.items);
  }
  sol.objective = objective;
  sol.stats["variant"] = "recoverable";
  return sol;
}

}  // namespace robsel
