#include "core/two_stage_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace robsel {

namespace {

double checked_probability(double v, const char* what) {
  if (v < -1e-9 || v > 1.0 + 1e-9)
    throw std::invalid_argument(std::string("randomized_round: ") + what +
                                " outside [0, 1]");
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

int compute_t_hat(int n, int num_scenarios) {
  return static_cast<int>(
      std::ceil(32.0 * std::log(static_cast<double>(n)) +
                8.0 * std::log(2.0 * static_cast<double>(num_scenarios))));
}

RoundedSets randomized_round(const FractionalPoint& fractional, int t_hat,
                             int p, Rng& rng, bool per_round_stats) {
  if (t_hat < 1) throw std::invalid_argument("randomized_round: t_hat < 1");
  const int n = static_cast<int>(fractional.x.size());
  const int K = static_cast<int>(fractional.y.size());
  for (int s = 0; s < K; ++s)
    if (static_cast<int>(fractional.y[static_cast<size_t>(s)].size()) != n)
      throw std::invalid_argument("randomized_round: ragged fractional point");

  RoundedSets out;
  out.y.resize(static_cast<size_t>(K));

  if (!per_round_stats) {
    // One Bernoulli per variable with the aggregated head probability;
    // distributionally identical to t_hat physical flips.
    for (int e = 0; e < n; ++e) {
      const double q = checked_probability(fractional.x[static_cast<size_t>(e)], "x");
      if (rng.bernoulli(1.0 - std::pow(1.0 - q, t_hat))) out.x.push_back(e);
    }
    for (int s = 0; s < K; ++s) {
      for (int e = 0; e < n; ++e) {
        const double q = checked_probability(
            fractional.y[static_cast<size_t>(s)][static_cast<size_t>(e)], "y");
        if (rng.bernoulli(1.0 - std::pow(1.0 - q, t_hat)))
          out.y[static_cast<size_t>(s)].push_back(e);
      }
    }
    return out;
  }

  std::vector<char> in_x(static_cast<size_t>(n), 0);
  std::vector<std::vector<char>> in_y(
      static_cast<size_t>(K), std::vector<char>(static_cast<size_t>(n), 0));
  // Per-scenario count of items in X union Y^S.
  std::vector<std::vector<char>> in_union = in_y;
  std::vector<int> union_size(static_cast<size_t>(K), 0);

  out.p_series.assign(static_cast<size_t>(K), {});
  for (int s = 0; s < K; ++s) out.p_series[static_cast<size_t>(s)].push_back(p);

  for (int t = 0; t < t_hat; ++t) {
    for (int e = 0; e < n; ++e) {
      const double q = checked_probability(fractional.x[static_cast<size_t>(e)], "x");
      if (rng.bernoulli(q) && !in_x[static_cast<size_t>(e)]) {
        in_x[static_cast<size_t>(e)] = 1;
        for (int s = 0; s < K; ++s) {
          if (!in_union[static_cast<size_t>(s)][static_cast<size_t>(e)]) {
            in_union[static_cast<size_t>(s)][static_cast<size_t>(e)] = 1;
            ++union_size[static_cast<size_t>(s)];
          }
        }
      }
    }
    for (int s = 0; s < K; ++s) {
      for (int e = 0; e < n; ++e) {
        const double q = checked_probability(
            fractional.y[static_cast<size_t>(s)][static_cast<size_t>(e)], "y");
        if (rng.bernoulli(q) && !in_y[static_cast<size_t>(s)][static_cast<size_t>(e)]) {
          in_y[static_cast<size_t>(s)][static_cast<size_t>(e)] = 1;
          if (!in_union[static_cast<size_t>(s)][static_cast<size_t>(e)]) {
            in_union[static_cast<size_t>(s)][static_cast<size_t>(e)] = 1;
            ++union_size[static_cast<size_t>(s)];
          }
        }
      }
    }
    for (int s = 0; s < K; ++s)
      out.p_series[static_cast<size_t>(s)].push_back(
          std::max(0, p - union_size[static_cast<size_t>(s)]));
  }

  for (int e = 0; e < n; ++e)
    if (in_x[static_cast<size_t>(e)]) out.x.push_back(e);
  for (int s = 0; s < K; ++s)
    for (int e = 0; e < n; ++e)
      if (in_y[static_cast<size_t>(s)][static_cast<size_t>(e)])
        out.y[static_cast<size_t>(s)].push_back(e);
  return out;
}

RepairOutcome repair(const ItemSet& x, const std::vector<ItemSet>& y,
                     const Instance& inst) {
  const int n = inst.n();
  const int p = inst.p;
  const int K = inst.scenario_count();
  if (static_cast<int>(y.size()) != K)
    throw std::invalid_argument("repair: one second-stage set per scenario");

  RepairOutcome out;
  out.x = x;

  std::vector<char> anywhere(static_cast<size_t>(n), 0);
  for (int e : x) anywhere[static_cast<size_t>(e)] = 1;
  for (const auto& ys : y)
    for (int e : ys) anywhere[static_cast<size_t>(e)] = 1;

  std::vector<int> shortfall(static_cast<size_t>(K), 0);
  int worst_short = 0;
  for (int s = 0; s < K; ++s) {
    const int union_size =
        static_cast<int>(set_union(out.x, y[static_cast<size_t>(s)]).size());
    shortfall[static_cast<size_t>(s)] = p - union_size;
    worst_short = std::max(worst_short, p - union_size);
  }

  // Top up with unselected items, cheapest first stage first, capped at 4.
  if (worst_short > 0) {
    std::vector<int> candidates;
    for (int e = 0; e < n; ++e)
      if (!anywhere[static_cast<size_t>(e)]) candidates.push_back(e);
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const auto ca = inst.first_stage[static_cast<size_t>(a)];
      const auto cb = inst.first_stage[static_cast<size_t>(b)];
      return ca != cb ? ca < cb : a < b;
    });
    const int take = std::min<int>(std::min(worst_short, 4),
                                   static_cast<int>(candidates.size()));
    for (int i = 0; i < take; ++i) {
      out.x.insert(std::upper_bound(out.x.begin(), out.x.end(), candidates[static_cast<size_t>(i)]),
                   candidates[static_cast<size_t>(i)]);
    }
    out.items_added = take;
    for (int s = 0; s < K; ++s) {
      if (shortfall[static_cast<size_t>(s)] > take)
        out.failed_scenarios.push_back(s);
    }
    if (!out.failed_scenarios.empty()) {
      out.feasible = false;
      return out;
    }
  }

  // Keep at most p items in X, dropping the most expensive first.
  if (static_cast<int>(out.x.size()) > p) {
    ItemSet kept = out.x;
    std::sort(kept.begin(), kept.end(), [&](int a, int b) {
      const auto ca = inst.first_stage[static_cast<size_t>(a)];
      const auto cb = inst.first_stage[static_cast<size_t>(b)];
      return ca != cb ? ca < cb : a < b;
    });
    kept.resize(static_cast<size_t>(p));
    std::sort(kept.begin(), kept.end());
    out.x = std::move(kept);
  }

  // Dedup and drop per-scenario surplus; each retained union has exactly p
  // items, which certifies feasibility.
  std::vector<ItemSet> retained(static_cast<size_t>(K));
  for (int s = 0; s < K; ++s) {
    ItemSet ys = set_difference(y[static_cast<size_t>(s)], out.x);
    auto costs = inst.scenario_costs(s);
    int surplus = static_cast<int>(out.x.size() + ys.size()) - p;
    if (surplus < 0)
      throw std::logic_error("repair: scenario short after trimming");
    while (surplus-- > 0) {
      auto worst = std::max_element(ys.begin(), ys.end(), [&](int a, int b) {
        const auto ca = costs[static_cast<size_t>(a)];
        const auto cb = costs[static_cast<size_t>(b)];
        return ca != cb ? ca < cb : a < b;
      });
      ys.erase(worst);
    }
    retained[static_cast<size_t>(s)] = std::move(ys);
  }

  // Price with the optimal completion of the final X; it can only undercut
  // the retained sets, which is checked.
  out.completions.resize(static_cast<size_t>(K));
  const Cost first_stage_cost = evaluate_cost(out.x, inst.first_stage);
  Cost objective = 0;
  for (int s = 0; s < K; ++s) {
    auto costs = inst.scenario_costs(s);
    PickResult pick = best_completion(out.x, costs, p);
    if (pick.value > evaluate_cost(retained[static_cast<size_t>(s)], costs))
      throw std::logic_error("repair: completion worse than the retained set");
    out.completions[static_cast<size_t>(s)] = std::move(pick.items);
    objective = std::max(objective, first_stage_cost + pick.value);
  }
  out.objective = objective;
  out.feasible = true;
  return out;
}

Solution solve_two_stage_discrete(const Instance& inst,
                                  const RoundingParams& params) {
  if (!inst.is_discrete())
    throw MethodMismatchError(
        "solve_two_stage_discrete: needs a discrete-scenario instance");
  if (inst.k)
    throw MethodMismatchError(
        "solve_two_stage_discrete: instance carries a recovery parameter");
  require_valid(inst);
  if (params.retries < 1)
    throw std::invalid_argument("solve_two_stage_discrete: retries < 1");

  const int n = inst.n();
  const int K = inst.scenario_count();
  LStarResult lstar = find_L_star(inst, params.lstar_mode);

  Solution sol;
  sol.method = "ts-discrete";
  sol.stats["l_star"] = lstar.l_star;

  if (lstar.l_star <= 1e-12) {
    // Zero-budget case: the items that are free everywhere already form an
    // optimal solution; no rounding needed.
    ItemSet x;
    for (int e = 0; e < n && static_cast<int>(x.size()) < inst.p; ++e)
      if (inst.first_stage[static_cast<size_t>(e)] == 0) x.push_back(e);
    Cost objective = evaluate_cost(x, inst.first_stage);
    for (int s = 0; s < K; ++s) {
      PickResult pick = best_completion(x, inst.scenario_costs(s), inst.p);
      objective = std::max(objective, evaluate_cost(x, inst.first_stage) + pick.value);
      sol.per_scenario[inst.scenario_id(s)] = std::move(pick.items);
    }
    if (objective != 0)
      throw std::logic_error("solve_two_stage_discrete: L* = 0 but the "
                             "zero-cost solution is not free");
    sol.first_stage = std::move(x);
    sol.objective = 0;
    sol.stats["t_hat"] = 0;
    sol.stats["attempts"] = 0;
    sol.stats["failures"] = 0;
    return sol;
  }

  const int t_hat = params.t_hat > 0 ? params.t_hat : compute_t_hat(n, K);
  Rng rng(params.seed);
  int failures = 0;
  std::vector<int> last_failed;
  for (int attempt = 1; attempt <= params.retries; ++attempt) {
    RoundedSets rounded =
        randomized_round(lstar.fractional, t_hat, inst.p, rng, params.per_round_stats);
    RepairOutcome repaired = repair(rounded.x, rounded.y, inst);
    if (!repaired.feasible) {
      ++failures;
      last_failed = repaired.failed_scenarios;
      continue;
    }
    sol.first_stage = std::move(repaired.x);
    for (int s = 0; s < K; ++s)
      sol.per_scenario[inst.scenario_id(s)] =
          std::move(repaired.completions[static_cast<size_t>(s)]);
    sol.objective = repaired.objective;
    sol.stats["t_hat"] = t_hat;
    sol.stats["attempts"] = attempt;
    sol.stats["failures"] = failures;
    sol.stats["items_added"] = repaired.items_added;
    sol.stats["ratio"] = static_cast<double>(repaired.objective) / lstar.l_star;
    if (params.per_round_stats) sol.stats["p_series"] = rounded.p_series;
    return sol;
  }

  std::string ids;
  for (int s : last_failed) ids += (ids.empty() ? "" : ", ") + std::to_string(s);
  throw RoundingFailedError("randomized rounding failed " +
                                std::to_string(failures) +
                                " attempt(s); short scenarios: [" + ids + "]",
                            std::move(last_failed));
}

}  // namespace robsel
