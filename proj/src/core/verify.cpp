#include "core/verify.hpp"

#include <algorithm>

namespace robsel {

namespace {

// Index sanity shared by both models; returns false when the set is unusable.
bool check_item_set(const ItemSet& s, int n, const std::string& label,
                    std::vector<std::string>& report) {
  ItemSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  bool ok = true;
  for (int e : sorted)
    if (e < 0 || e >= n) {
      report.push_back(label + ": item index " + std::to_string(e) +
                       " out of range");
      ok = false;
    }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    report.push_back(label + ": duplicate items");
    ok = false;
  }
  return ok;
}

ItemSet sorted_copy(const ItemSet& s) {
  ItemSet out = s;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> verify_solution(const Instance& inst,
                                         const Solution& sol) {
  std::vector<std::string> report;
  const int n = inst.n();
  const int p = inst.p;
  const bool recoverable = inst.k.has_value();

  if (!check_item_set(sol.first_stage, n, "first_stage", report)) return report;
  const ItemSet x = sorted_copy(sol.first_stage);

  if (recoverable) {
    if (static_cast<int>(x.size()) != p)
      report.push_back("first_stage: |X| = " + std::to_string(x.size()) +
                       ", expected exactly p = " + std::to_string(p));
  } else if (static_cast<int>(x.size()) > p) {
    report.push_back("first_stage: |X| = " + std::to_string(x.size()) +
                     " exceeds p = " + std::to_string(p));
  }
  if (!report.empty()) return report;

  // Every instance scenario needs a recorded set, and nothing extra.
  std::vector<ItemSet> second(static_cast<size_t>(inst.scenario_count()));
  for (int s = 0; s < inst.scenario_count(); ++s) {
    const std::string id = inst.scenario_id(s);
    auto it = sol.per_scenario.find(id);
    if (it == sol.per_scenario.end()) {
      report.push_back("per_scenario: missing set for scenario " + id);
      continue;
    }
    if (!check_item_set(it->second, n, "per_scenario[" + id + "]", report))
      continue;
    second[static_cast<size_t>(s)] = sorted_copy(it->second);
  }
  for (const auto& [id, _] : sol.per_scenario) {
    bool known = false;
    for (int s = 0; s < inst.scenario_count(); ++s)
      if (inst.scenario_id(s) == id) known = true;
    if (!known) report.push_back("per_scenario: unknown scenario id " + id);
  }
  if (!report.empty()) return report;

  const Cost first_cost = evaluate_cost(x, inst.first_stage);
  Cost stated_worst = 0;
  Cost optimal_worst = 0;
  for (int s = 0; s < inst.scenario_count(); ++s) {
    const std::string id = inst.scenario_id(s);
    const ItemSet& ys = second[static_cast<size_t>(s)];
    auto costs = inst.scenario_costs(s);
    if (recoverable) {
      if (static_cast<int>(ys.size()) != p) {
        report.push_back("scenario " + id + ": |Y| = " +
                         std::to_string(ys.size()) + ", expected p = " +
                         std::to_string(p));
        continue;
      }
      const auto swapped = set_difference(ys, x).size();
      if (static_cast<int>(swapped) > *inst.k) {
        report.push_back("scenario " + id + ": |Y \\ X| = " +
                         std::to_string(swapped) + " exceeds k = " +
                         std::to_string(*inst.k));
        continue;
      }
      stated_worst = std::max(stated_worst, first_cost + evaluate_cost(ys, costs));
      optimal_worst = std::max(
          optimal_worst, first_cost + best_recovery(x, costs, p, *inst.k).value);
    } else {
      if (!set_intersection(x, ys).empty()) {
        report.push_back("scenario " + id +
                         ": second-stage set overlaps X (disjointness)");
        continue;
      }
      if (static_cast<int>(x.size() + ys.size()) != p) {
        report.push_back("scenario " + id + ": |X| + |Y| = " +
                         std::to_string(x.size() + ys.size()) +
                         ", expected p = " + std::to_string(p));
        continue;
      }
      stated_worst = std::max(stated_worst, first_cost + evaluate_cost(ys, costs));
      optimal_worst =
          std::max(optimal_worst, first_cost + best_completion(x, costs, p).value);
    }
  }
  if (!report.empty()) return report;

  if (sol.objective != stated_worst)
    report.push_back("objective " + std::to_string(sol.objective) +
                     " does not match the recorded sets (worst scenario costs " +
                     std::to_string(stated_worst) + ")");
  if (sol.objective != optimal_worst)
    report.push_back("objective " + std::to_string(sol.objective) +
                     " does not match the recomputed optimum " +
                     std::to_string(optimal_worst) +
                     " for the recorded first stage");
  return report;
}

}  // namespace robsel
