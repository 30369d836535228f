#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace robsel {

// Costs are nonnegative integers throughout; this keeps every threshold in
// the parametric solver an exact integer and removes floating point from the
// exact paths.
using Cost = std::int64_t;

// Item sets are ascending index vectors without duplicates.
using ItemSet = std::vector<int>;

struct DiscreteScenarios {
  std::vector<std::vector<Cost>> scenarios;  // K rows, one cost per item
};

struct IntervalCosts {
  // Lower bounds are carried for format fidelity; the solvers only ever look
  // at the upper bounds (the inner maximization is attained there).
  std::vector<Cost> lower;
  std::vector<Cost> upper;
};

// Items are indexed 0..n-1. p is the selection size. A present k selects the
// recoverable model (a full solution picked up front, at most k items swapped
// after the scenario reveals); an absent k selects the two-stage model (a
// partial solution completed to p items at scenario prices).
struct Instance {
  std::vector<Cost> first_stage;
  std::variant<DiscreteScenarios, IntervalCosts> uncertainty;
  int p = 0;
  std::optional<int> k;
  nlohmann::json meta = nlohmann::json::object();

  int n() const { return static_cast<int>(first_stage.size()); }
  bool is_interval() const {
    return std::holds_alternative<IntervalCosts>(uncertainty);
  }
  bool is_discrete() const { return !is_interval(); }
  const DiscreteScenarios& discrete() const {
    return std::get<DiscreteScenarios>(uncertainty);
  }
  const IntervalCosts& interval() const {
    return std::get<IntervalCosts>(uncertainty);
  }

  // Uniform scenario view. Discrete instances expose their K scenarios;
  // interval instances expose the single worst case (all upper bounds).
  int scenario_count() const;
  std::span<const Cost> scenario_costs(int s) const;
  std::string scenario_id(int s) const;  // "0".."K-1", or "upper"
};

struct Solution {
  ItemSet first_stage;                          // X
  std::map<std::string, ItemSet> per_scenario;  // scenario id -> second set
  Cost objective = 0;
  std::string method;
  nlohmann::json stats = nlohmann::json::object();
};

// Report-style validation; an empty result means the instance is well formed.
std::vector<std::string> validate_instance(const Instance& inst);

// Throws InvalidInstanceError when validate_instance reports anything.
void require_valid(const Instance& inst);

// Sum of the given costs over the items. Throws std::out_of_range on a bad
// index.
Cost evaluate_cost(const ItemSet& items, std::span<const Cost> costs);

struct PickResult {
  ItemSet items;
  Cost value = 0;
};

// Cheapest completion of X to exactly p items drawn from E \ X. Requires
// |X| <= p; ties go to the smaller item index.
PickResult best_completion(const ItemSet& x, std::span<const Cost> costs, int p);

// Cheapest Y with |Y| = p and |Y \ X| <= k. Tries every swap count j = 0..k:
// keep the (p-j) cheapest items of X and add the j cheapest outside items;
// the uniform-matroid exchange property makes this exact. Requires |X| = p.
PickResult best_recovery(const ItemSet& x, std::span<const Cost> costs, int p,
                         int k);

// Sorted-set helpers shared by the solvers.
bool set_contains(const ItemSet& s, int item);
ItemSet set_union(const ItemSet& a, const ItemSet& b);
ItemSet set_difference(const ItemSet& a, const ItemSet& b);
ItemSet set_intersection(const ItemSet& a, const ItemSet& b);

}  // namespace robsel
