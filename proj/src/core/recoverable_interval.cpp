#include "core/recoverable_interval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/selection.hpp"

namespace robsel {

namespace {

constexpr Cost kNoCandidate = std::numeric_limits<Cost>::max();

void require_recoverable_interval(const Instance& inst, const char* who) {
  if (!inst.is_interval())
    throw MethodMismatchError(std::string(who) + ": needs an interval instance");
  if (!inst.k)
    throw MethodMismatchError(std::string(who) + ": needs a recovery parameter");
}

void insert_sorted(ItemSet& s, int item) {
  s.insert(std::upper_bound(s.begin(), s.end(), item), item);
}

void erase_sorted(ItemSet& s, int item) {
  auto it = std::lower_bound(s.begin(), s.end(), item);
  if (it == s.end() || *it != item)
    throw std::logic_error("transformation witness not in its set");
  s.erase(it);
}

struct Candidate {
  Cost value = kNoCandidate;
  CondKind kind = CondKind::tcon1;
  int w1 = -1, w2 = -1, w3 = -1;

  bool better_than(const Candidate& other) const {
    if (value != other.value) return value < other.value;
    if (kind != other.kind) return static_cast<int>(kind) < static_cast<int>(other.kind);
    if (w1 != other.w1) return w1 < other.w1;
    if (w2 != other.w2) return w2 < other.w2;
    return w3 < other.w3;
  }
};

}  // namespace

const char* cond_kind_name(CondKind kind) {
  switch (kind) {
    case CondKind::tcon1: return "tcon1";
    case CondKind::tcon2: return "tcon2";
    case CondKind::tcon3: return "tcon3";
    case CondKind::tcon4: return "tcon4";
  }
  return "?";
}

LagrangianState initial_partition(const Instance& inst) {
  require_recoverable_interval(inst, "initial_partition");
  require_valid(inst);
  const ItemSet x = select_p_smallest(inst.first_stage, inst.p);
  const ItemSet y = select_p_smallest(inst.interval().upper, inst.p);
  LagrangianState state;
  state.theta = 0;
  state.ez = set_intersection(x, y);
  state.ex = set_difference(x, y);
  state.ey = set_difference(y, x);
  return state;
}

Cost phi(const LagrangianState& state, const Instance& inst) {
  const auto& c = inst.first_stage;
  const auto& u = inst.interval().upper;
  const Cost p_minus_k = static_cast<Cost>(inst.p - *inst.k);
  Cost total = p_minus_k * state.theta;
  for (int e : state.ex) total += c[static_cast<size_t>(e)];
  for (int e : state.ey) total += u[static_cast<size_t>(e)];
  for (int e : state.ez)
    total += c[static_cast<size_t>(e)] + u[static_cast<size_t>(e)] - state.theta;
  return total;
}

ThresholdResult min_threshold(const LagrangianState& state,
                              const Instance& inst) {
  const int n = inst.n();
  const auto& c = inst.first_stage;
  const auto& ub = inst.interval().upper;

  // Outside pool: items in none of the three sets. Only its cheapest
  // (C + upper) member can witness tcon1, and only the most expensive ez
  // member can witness tcon4.
  std::vector<char> member(static_cast<size_t>(n), 0);
  for (int e : state.ex) member[static_cast<size_t>(e)] = 1;
  for (int e : state.ey) member[static_cast<size_t>(e)] = 1;
  for (int e : state.ez) member[static_cast<size_t>(e)] = 1;
  Cost out_min = kNoCandidate;
  int out_arg = -1;
  for (int e = 0; e < n; ++e) {
    if (member[static_cast<size_t>(e)]) continue;
    const Cost v = c[static_cast<size_t>(e)] + ub[static_cast<size_t>(e)];
    if (v < out_min) {
      out_min = v;
      out_arg = e;
    }
  }
  Cost ez_max = std::numeric_limits<Cost>::min();
  int ez_arg = -1;
  for (int e : state.ez) {
    const Cost v = c[static_cast<size_t>(e)] + ub[static_cast<size_t>(e)];
    if (v > ez_max) {
      ez_max = v;
      ez_arg = e;
    }
  }

  Candidate best;
  auto offer = [&](Candidate cand) {
    if (cand.better_than(best)) best = cand;
  };

  for (int i : state.ex) {
    for (int j : state.ey) {
      if (out_arg >= 0)
        offer({out_min - c[static_cast<size_t>(i)] - ub[static_cast<size_t>(j)],
               CondKind::tcon1, i, j, out_arg});
      offer({ub[static_cast<size_t>(i)] - ub[static_cast<size_t>(j)],
             CondKind::tcon2, i, j, -1});
      offer({c[static_cast<size_t>(j)] - c[static_cast<size_t>(i)],
             CondKind::tcon3, i, j, -1});
      if (ez_arg >= 0)
        offer({c[static_cast<size_t>(j)] + ub[static_cast<size_t>(i)] - ez_max,
               CondKind::tcon4, i, j, ez_arg});
    }
  }

  if (best.value == kNoCandidate)
    throw std::logic_error("min_threshold: no condition instance exists");
  if (best.value < state.theta)
    throw std::logic_error("min_threshold: state violates a condition below "
                           "the current multiplier");

  ThresholdResult result;
  result.theta_next = best.value;
  result.binding.kind = best.kind;
  switch (best.kind) {
    case CondKind::tcon1:
      result.binding.i = best.w1;
      result.binding.j = best.w2;
      result.binding.u = best.w3;
      break;
    case CondKind::tcon2:
      result.binding.u = best.w1;
      result.binding.j = best.w2;
      break;
    case CondKind::tcon3:
      result.binding.i = best.w1;
      result.binding.u = best.w2;
      break;
    case CondKind::tcon4:
      result.binding.l = best.w1;
      result.binding.m = best.w2;
      result.binding.r = best.w3;
      break;
  }
  return result;
}

LagrangianState apply_transformation(const LagrangianState& state,
                                     const BindingCondition& binding,
                                     const Instance& inst) {
  const auto& c = inst.first_stage;
  const auto& ub = inst.interval().upper;
  auto cost_of = [&](int e) { return c[static_cast<size_t>(e)]; };
  auto upper_of = [&](int e) { return ub[static_cast<size_t>(e)]; };

  Cost slack = 0;
  switch (binding.kind) {
    case CondKind::tcon1:
      slack = cost_of(binding.u) + upper_of(binding.u) - cost_of(binding.i) -
              upper_of(binding.j);
      break;
    case CondKind::tcon2:
      slack = upper_of(binding.u) - upper_of(binding.j);
      break;
    case CondKind::tcon3:
      slack = cost_of(binding.u) - cost_of(binding.i);
      break;
    case CondKind::tcon4:
      slack = cost_of(binding.m) + upper_of(binding.l) - cost_of(binding.r) -
              upper_of(binding.r);
      break;
  }
  if (slack != state.theta)
    throw std::logic_error("apply_transformation: condition not binding");

  const Cost phi_before = phi(state, inst);
  LagrangianState next = state;
  switch (binding.kind) {
    case CondKind::tcon1:
      insert_sorted(next.ez, binding.u);
      erase_sorted(next.ex, binding.i);
      erase_sorted(next.ey, binding.j);
      break;
    case CondKind::tcon2:
      erase_sorted(next.ex, binding.u);
      insert_sorted(next.ez, binding.u);
      erase_sorted(next.ey, binding.j);
      break;
    case CondKind::tcon3:
      erase_sorted(next.ey, binding.u);
      insert_sorted(next.ez, binding.u);
      erase_sorted(next.ex, binding.i);
      break;
    case CondKind::tcon4:
      erase_sorted(next.ez, binding.r);
      insert_sorted(next.ez, binding.l);
      insert_sorted(next.ez, binding.m);
      erase_sorted(next.ex, binding.l);
      erase_sorted(next.ey, binding.m);
      break;
  }
  if (next.ez.size() != state.ez.size() + 1)
    throw std::logic_error("apply_transformation: |ez| did not grow by one");
  if (phi(next, inst) != phi_before)
    throw std::logic_error("apply_transformation: phi changed");
  return next;
}

void check_state(const LagrangianState& state, const Instance& inst) {
  const int n = inst.n();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const ItemSet* s : {&state.ex, &state.ey, &state.ez}) {
    for (int e : *s) {
      if (e < 0 || e >= n) throw std::logic_error("state: item out of range");
      if (seen[static_cast<size_t>(e)]++)
        throw std::logic_error("state: sets are not pairwise disjoint");
    }
  }
  if (state.ex.size() != state.ey.size())
    throw std::logic_error("state: |ex| != |ey|");
  if (static_cast<int>(state.ex.size() + state.ez.size()) != inst.p)
    throw std::logic_error("state: |ex| + |ez| != p");
  if (state.theta < 0) throw std::logic_error("state: negative theta");

  // All four families must hold at the current multiplier.
  if (!state.ex.empty() && !state.ey.empty()) {
    ThresholdResult t = min_threshold(state, inst);
    if (t.theta_next < state.theta)
      throw std::logic_error("state: a condition is violated at theta");
  }
}

Solution solve_recoverable_interval(const Instance& inst,
                                    const RecSolveOptions& options) {
  require_recoverable_interval(inst, "solve_recoverable_interval");
  LagrangianState state = initial_partition(inst);
  const int target = inst.p - *inst.k;

  nlohmann::json trace = nlohmann::json::array();
  int steps = 0;
  const size_t initial_ez = state.ez.size();
  while (static_cast<int>(state.ez.size()) < target) {
    ThresholdResult next = min_threshold(state, inst);
    state.theta = next.theta_next;
    state = apply_transformation(state, next.binding, inst);
    ++steps;
    if (options.trace) {
      const auto& b = next.binding;
      std::string witnesses;
      auto add = [&](const char* name, int e) {
        if (e < 0) return;
        if (!witnesses.empty()) witnesses += ' ';
        witnesses += std::string(name) + "=e" + std::to_string(e + 1);
      };
      add("i", b.i);
      add("j", b.j);
      add("u", b.u);
      add("l", b.l);
      add("m", b.m);
      add("r", b.r);
      trace.push_back("theta=" + std::to_string(state.theta) + " " +
                      cond_kind_name(b.kind) + " " + witnesses +
                      " |E_Z|=" + std::to_string(state.ez.size()));
    }
  }

  // Complementary slackness: either theta never moved off zero or the
  // intersection constraint is tight.
  if (state.theta != 0 && static_cast<int>(state.ez.size()) != target)
    throw std::logic_error(
        "solve_recoverable_interval: slackness violated at termination");

  Solution sol;
  sol.method = "rec-interval";
  sol.first_stage = set_union(state.ex, state.ez);
  ItemSet second = set_union(state.ey, state.ez);
  sol.objective = evaluate_cost(sol.first_stage, inst.first_stage) +
                  evaluate_cost(second, inst.interval().upper);
  sol.per_scenario["upper"] = std::move(second);
  sol.stats["final_theta"] = state.theta;
  sol.stats["transformations"] = steps;
  sol.stats["initial_overlap"] = initial_ez;
  if (options.trace) sol.stats["trace"] = std::move(trace);
  return sol;
}

}  // namespace robsel
