#include <cmath>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/lp_models.hpp"
#include "core/oracle.hpp"
#include "core/recoverable_interval.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace robsel;

namespace {

Instance make(std::vector<Cost> first, std::vector<Cost> upper, int p, int k) {
  Instance inst;
  inst.first_stage = std::move(first);
  const auto n = inst.first_stage.size();
  inst.uncertainty = IntervalCosts{std::vector<Cost>(n, 0), std::move(upper)};
  inst.p = p;
  inst.k = k;
  return inst;
}

Instance worked(int k) { return make({2, 3, 1, 5}, {4, 1, 6, 2}, 2, k); }

}  // namespace

TEST_SUITE("recoverable_interval") {
  TEST_CASE("initial partition splits the two independent selections") {
    SUBCASE("disjoint selections") {
      auto state = initial_partition(worked(1));
      CHECK(state.theta == 0);
      CHECK(state.ex == ItemSet{0, 2});
      CHECK(state.ey == ItemSet{1, 3});
      CHECK(state.ez.empty());
    }
    SUBCASE("identical costs collapse into the overlap") {
      auto state = initial_partition(make({1, 2, 3, 4}, {1, 2, 3, 4}, 2, 1));
      CHECK(state.ez == ItemSet{0, 1});
      CHECK(state.ex.empty());
      CHECK(state.ey.empty());
    }
    SUBCASE("two items, opposite stages") {
      auto state = initial_partition(make({0, 9}, {9, 0}, 1, 0));
      CHECK(state.ex == ItemSet{0});
      CHECK(state.ey == ItemSet{1});
      CHECK(state.ez.empty());
    }
  }

  TEST_CASE("phi evaluates the relaxed objective") {
    auto inst = worked(1);
    auto state = initial_partition(inst);
    CHECK(phi(state, inst) == 6);

    SUBCASE("theta = 0 reduces to the two stage sums") {
      const Cost direct =
          evaluate_cost(set_union(state.ex, state.ez), inst.first_stage) +
          evaluate_cost(set_union(state.ey, state.ez), inst.interval().upper);
      CHECK(phi(state, inst) == direct);
    }
    SUBCASE("final state of the worked run") {
      LagrangianState final_state;
      final_state.theta = 1;
      final_state.ex = {2};
      final_state.ey = {3};
      final_state.ez = {1};
      CHECK(phi(final_state, inst) == 7);
    }
  }

  TEST_CASE("min_threshold finds the binding condition of the worked run") {
    auto inst = worked(1);
    auto state = initial_partition(inst);
    auto next = min_threshold(state, inst);
    CHECK(next.theta_next == 1);
    CHECK(next.binding.kind == CondKind::tcon3);
    CHECK(next.binding.u == 1);  // enters the overlap from the ey side
    CHECK(next.binding.i == 0);  // leaves ex
  }

  TEST_CASE("an already-binding condition returns the current theta") {
    // Outside item with C + upper equal to the extreme pair: slack 0 at
    // theta = 0, and the first family wins the tie.
    auto inst = make({0, 5, 0}, {5, 0, 0}, 1, 0);
    auto state = initial_partition(inst);
    REQUIRE(state.ex == ItemSet{0});
    REQUIRE(state.ey == ItemSet{1});
    auto next = min_threshold(state, inst);
    CHECK(next.theta_next == 0);
    CHECK(next.binding.kind == CondKind::tcon1);
    CHECK(next.binding.u == 2);
  }

  TEST_CASE("families over empty sets are skipped") {
    // n = 2p leaves no outside items and the overlap starts empty, so only
    // the two pair families exist.
    auto inst = worked(1);
    auto state = initial_partition(inst);
    auto next = min_threshold(state, inst);
    CHECK((next.binding.kind == CondKind::tcon2 ||
           next.binding.kind == CondKind::tcon3));
  }

  TEST_CASE("apply_transformation performs the worked exchange") {
    auto inst = worked(1);
    auto state = initial_partition(inst);
    auto next = min_threshold(state, inst);
    state.theta = next.theta_next;
    auto after = apply_transformation(state, next.binding, inst);
    CHECK(after.ex == ItemSet{2});
    CHECK(after.ey == ItemSet{3});
    CHECK(after.ez == ItemSet{1});
    CHECK(phi(after, inst) == phi(state, inst));
  }

  TEST_CASE("the overlap exchange swaps two in and one out") {
    // Hand-built state with a tight tcon4 triple at theta = 1.
    Instance inst = make({1, 2, 1, 9, 9}, {2, 1, 2, 9, 9}, 2, 0);
    LagrangianState state;
    state.theta = 1;
    state.ex = {0};
    state.ey = {1};
    state.ez = {2};
    check_state(state, inst);  // sanity: all conditions hold at theta = 1

    BindingCondition binding;
    binding.kind = CondKind::tcon4;
    binding.l = 0;
    binding.m = 1;
    binding.r = 2;
    auto after = apply_transformation(state, binding, inst);
    CHECK(after.ez == ItemSet{0, 1});
    CHECK(after.ex.empty());
    CHECK(after.ey.empty());
    CHECK(after.ez.size() == state.ez.size() + 1);
    CHECK(phi(after, inst) == phi(state, inst));
  }

  TEST_CASE("a non-tight condition is rejected loudly") {
    auto inst = worked(1);
    auto state = initial_partition(inst);
    BindingCondition binding;
    binding.kind = CondKind::tcon3;
    binding.u = 1;
    binding.i = 0;
    // Slack is 1 but theta is still 0.
    CHECK_THROWS_AS(apply_transformation(state, binding, inst),
                    std::logic_error);
  }

  TEST_CASE("solver reproduces the documented objectives") {
    CHECK(solve_recoverable_interval(worked(1)).objective == 7);
    CHECK(solve_recoverable_interval(worked(0)).objective == 10);
    CHECK(solve_recoverable_interval(worked(2)).objective == 6);

    auto sol = solve_recoverable_interval(worked(1));
    CHECK(sol.first_stage == ItemSet{1, 2});
    CHECK(sol.per_scenario.at("upper") == ItemSet{1, 3});
    CHECK(sol.method == "rec-interval");
  }

  TEST_CASE("trace lines describe each exchange") {
    auto sol = solve_recoverable_interval(worked(0), {.trace = true});
    REQUIRE(sol.stats.contains("trace"));
    CHECK(sol.stats["trace"].size() == 2);
    const std::string first = sol.stats["trace"][0].get<std::string>();
    CHECK(first.find("tcon3") != std::string::npos);
  }

  TEST_CASE("ties at theta = 0 still terminate with the exact optimum") {
    auto inst = make({1, 1}, {2, 1}, 1, 0);
    auto sol = solve_recoverable_interval(inst);
    CHECK(sol.objective == 2);
    CHECK(sol.stats["final_theta"].get<Cost>() == 0);
  }

  TEST_CASE("matches the enumeration oracle over random instances") {
    Rng rng(59);
    for (int trial = 0; trial < 250; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(9));  // n <= 10
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
      Instance inst =
          gen_random(n, p, k, UncertaintyKind::interval, 0, 50, 6000 + trial);
      const Cost exact = exact_recoverable(inst).objective;
      CHECK(solve_recoverable_interval(inst).objective == exact);
    }
  }

  TEST_CASE("heavy cost ties still terminate at the exact optimum") {
    // Tiny cost ranges force chains of exchanges at the same multiplier.
    for (Cost bound : {0, 1, 2, 3}) {
      for (int trial = 0; trial < 120; ++trial) {
        Rng rng(50000 + 1000 * static_cast<int>(bound) + trial);
        const int n = 2 + static_cast<int>(rng.below(9));
        const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
        Instance inst = gen_random(n, p, k, UncertaintyKind::interval, 0, bound,
                                   60000 + 1000 * static_cast<std::uint64_t>(bound) + trial);
        CHECK(solve_recoverable_interval(inst).objective ==
              exact_recoverable(inst).objective);
      }
    }
  }

  TEST_CASE("matches the integral relaxation beyond oracle reach") {
    for (int trial = 0; trial < 25; ++trial) {
      Rng rng(90000 + trial);
      const int n = 20 + static_cast<int>(rng.below(21));  // 20..40 items
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
      Instance inst =
          gen_random(n, p, k, UncertaintyKind::interval, 0, 12, 95000 + trial);
      const Cost solver = solve_recoverable_interval(inst).objective;
      auto lp = solve_lp(build_mip3_relaxation(inst));
      REQUIRE(lp.status == LpStatus::optimal);
      CHECK(std::abs(lp.objective - static_cast<double>(solver)) <= 1e-6);
    }
  }

  TEST_CASE("every visited state is sound") {
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(8));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
      Instance inst =
          gen_random(n, p, k, UncertaintyKind::interval, 0, 30, 7000 + trial);
      const Cost opt = exact_recoverable(inst).objective;

      LagrangianState state = initial_partition(inst);
      check_state(state, inst);
      CHECK(phi(state, inst) <= opt);
      Cost last_theta = 0;
      int steps = 0;
      while (static_cast<int>(state.ez.size()) < inst.p - *inst.k) {
        auto next = min_threshold(state, inst);
        CHECK(next.theta_next >= last_theta);  // theta never decreases
        state.theta = next.theta_next;
        const Cost before = phi(state, inst);
        const auto ez_before = state.ez.size();
        state = apply_transformation(state, next.binding, inst);
        check_state(state, inst);
        CHECK(state.ez.size() == ez_before + 1);
        CHECK(phi(state, inst) == before);
        CHECK(phi(state, inst) <= opt);
        last_theta = next.theta_next;
        ++steps;
      }
      CHECK(steps <= inst.p - *inst.k);
      // Termination: the relaxation value meets the true optimum.
      CHECK(phi(state, inst) == opt);
    }
  }

  TEST_CASE("rejects instances without intervals or k") {
    Instance discrete;
    discrete.first_stage = {1, 2};
    discrete.p = 1;
    discrete.k = 0;
    discrete.uncertainty = DiscreteScenarios{{{1, 2}}};
    CHECK_THROWS_AS(solve_recoverable_interval(discrete), MethodMismatchError);

    auto no_k = worked(1);
    no_k.k = std::nullopt;
    CHECK_THROWS_AS(solve_recoverable_interval(no_k), MethodMismatchError);
  }
}
