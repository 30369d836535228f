#include "core/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/selection.hpp"

namespace robsel {

int Instance::scenario_count() const {
  if (is_interval()) return 1;
  return static_cast<int>(discrete().scenarios.size());
}

std::span<const Cost> Instance::scenario_costs(int s) const {
  if (s < 0 || s >= scenario_count())
    throw std::out_of_range("scenario index out of range");
  if (is_interval()) return interval().upper;
  return discrete().scenarios[static_cast<size_t>(s)];
}

std::string Instance::scenario_id(int s) const {
  if (is_interval()) return "upper";
  return std::to_string(s);
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> report;
  const int n = inst.n();
  if (n == 0) {
    report.push_back("instance has no items");
    return report;
  }
  if (inst.p < 1 || inst.p > n - 1) report.push_back("p out of range");
  if (inst.k && (*inst.k < 0 || *inst.k > inst.p))
    report.push_back("k out of range");
  for (int e = 0; e < n; ++e)
    if (inst.first_stage[static_cast<size_t>(e)] < 0)
      report.push_back("negative first-stage cost at item e" +
                       std::to_string(e + 1));
  if (inst.is_interval()) {
    const auto& iv = inst.interval();
    if (static_cast<int>(iv.lower.size()) != n ||
        static_cast<int>(iv.upper.size()) != n) {
      report.push_back("interval bound vectors do not have length n");
      return report;
    }
    for (int e = 0; e < n; ++e) {
      const auto le = iv.lower[static_cast<size_t>(e)];
      const auto ue = iv.upper[static_cast<size_t>(e)];
      if (le < 0 || ue < 0)
        report.push_back("negative interval bound at item e" +
                         std::to_string(e + 1));
      if (le > ue)
        report.push_back("inverted interval at item e" + std::to_string(e + 1) +
                         " (lower " + std::to_string(le) + " > upper " +
                         std::to_string(ue) + ")");
    }
  } else {
    const auto& ds = inst.discrete();
    if (ds.scenarios.empty()) report.push_back("discrete scenario set is empty");
    for (size_t s = 0; s < ds.scenarios.size(); ++s) {
      if (static_cast<int>(ds.scenarios[s].size()) != n) {
        report.push_back("scenario " + std::to_string(s) + " has " +
                         std::to_string(ds.scenarios[s].size()) +
                         " costs, expected " + std::to_string(n));
        continue;
      }
      for (int e = 0; e < n; ++e)
        if (ds.scenarios[s][static_cast<size_t>(e)] < 0)
          report.push_back("negative cost in scenario " + std::to_string(s) +
                           " at item e" + std::to_string(e + 1));
    }
  }
  return report;
}

void require_valid(const Instance& inst) {
  auto report = validate_instance(inst);
  if (report.empty()) return;
  std::string msg = "invalid instance: " + report.front();
  if (report.size() > 1)
    msg += " (+" + std::to_string(report.size() - 1) + " more)";
  throw InvalidInstanceError(msg, std::move(report));
}

Cost evaluate_cost(const ItemSet& items, std::span<const Cost> costs) {
  Cost total = 0;
  for (int e : items) {
    if (e < 0 || static_cast<size_t>(e) >= costs.size())
      throw std::out_of_range("item index " + std::to_string(e) +
                              " out of range");
    total += costs[static_cast<size_t>(e)];
  }
  return total;
}

PickResult best_completion(const ItemSet& x, std::span<const Cost> costs,
                           int p) {
  const int n = static_cast<int>(costs.size());
  if (static_cast<int>(x.size()) > p)
    throw std::invalid_argument("best_completion: |X| exceeds p");
  const int need = p - static_cast<int>(x.size());
  std::vector<Cost> masked(costs.begin(), costs.end());
  // Push X items out of reach so the selection below only sees E \ X.
  std::vector<char> in_x(static_cast<size_t>(n), 0);
  for (int e : x) {
    if (e < 0 || e >= n) throw std::out_of_range("best_completion: bad index");
    in_x[static_cast<size_t>(e)] = 1;
  }
  std::vector<int> candidates;
  candidates.reserve(static_cast<size_t>(n) - x.size());
  for (int e = 0; e < n; ++e)
    if (!in_x[static_cast<size_t>(e)]) candidates.push_back(e);
  if (static_cast<int>(candidates.size()) < need)
    throw std::invalid_argument("best_completion: not enough items");

  std::nth_element(candidates.begin(), candidates.begin() + need,
                   candidates.end(), [&](int a, int b) {
                     const auto ca = costs[static_cast<size_t>(a)];
                     const auto cb = costs[static_cast<size_t>(b)];
                     return ca != cb ? ca < cb : a < b;
                   });
  PickResult out;
  out.items.assign(candidates.begin(), candidates.begin() + need);
  std::sort(out.items.begin(), out.items.end());
  out.value = evaluate_cost(out.items, costs);
  return out;
}

PickResult best_recovery(const ItemSet& x, std::span<const Cost> costs, int p,
                         int k) {
  const int n = static_cast<int>(costs.size());
  if (static_cast<int>(x.size()) != p)
    throw std::invalid_argument("best_recovery: |X| must equal p");
  if (k < 0 || k > p) throw std::invalid_argument("best_recovery: bad k");

  auto by_cost = [&](int a, int b) {
    const auto ca = costs[static_cast<size_t>(a)];
    const auto cb = costs[static_cast<size_t>(b)];
    return ca != cb ? ca < cb : a < b;
  };

  std::vector<int> inside = x;
  std::sort(inside.begin(), inside.end(), by_cost);
  std::vector<char> in_x(static_cast<size_t>(n), 0);
  for (int e : x) {
    if (e < 0 || e >= n) throw std::out_of_range("best_recovery: bad index");
    in_x[static_cast<size_t>(e)] = 1;
  }
  std::vector<int> outside;
  outside.reserve(static_cast<size_t>(n - p));
  for (int e = 0; e < n; ++e)
    if (!in_x[static_cast<size_t>(e)]) outside.push_back(e);
  std::sort(outside.begin(), outside.end(), by_cost);

  std::vector<Cost> pref_in(inside.size() + 1, 0);
  for (size_t i = 0; i < inside.size(); ++i)
    pref_in[i + 1] = pref_in[i] + costs[static_cast<size_t>(inside[i])];
  std::vector<Cost> pref_out(outside.size() + 1, 0);
  for (size_t i = 0; i < outside.size(); ++i)
    pref_out[i + 1] = pref_out[i] + costs[static_cast<size_t>(outside[i])];

  const int max_swaps = std::min<int>(k, static_cast<int>(outside.size()));
  int best_j = 0;
  Cost best_value = pref_in[static_cast<size_t>(p)];
  for (int j = 1; j <= max_swaps; ++j) {
    const Cost v = pref_in[static_cast<size_t>(p - j)] +
                   pref_out[static_cast<size_t>(j)];
    if (v < best_value) {
      best_value = v;
      best_j = j;
    }
  }
  PickResult out;
  out.items.assign(inside.begin(), inside.begin() + (p - best_j));
  out.items.insert(out.items.end(), outside.begin(), outside.begin() + best_j);
  std::sort(out.items.begin(), out.items.end());
  out.value = best_value;
  return out;
}

bool set_contains(const ItemSet& s, int item) {
  return std::binary_search(s.begin(), s.end(), item);
}

ItemSet set_union(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ItemSet set_difference(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ItemSet set_intersection(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace robsel
