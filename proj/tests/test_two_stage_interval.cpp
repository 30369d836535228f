#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"
#include "core/two_stage_interval.hpp"
#include "doctest.h"

using namespace robsel;

namespace {

Instance make(std::vector<Cost> first, std::vector<Cost> upper, int p) {
  Instance inst;
  inst.first_stage = std::move(first);
  const auto n = inst.first_stage.size();
  inst.uncertainty = IntervalCosts{std::vector<Cost>(n, 0), std::move(upper)};
  inst.p = p;
  return inst;
}

}  // namespace

TEST_SUITE("two_stage_interval") {
  TEST_CASE("worked example: cheap stage per item wins") {
    auto sol = solve_two_stage_interval(make({2, 3, 1, 5}, {4, 1, 6, 2}, 2));
    CHECK(sol.objective == 2);
    CHECK(sol.first_stage == ItemSet{2});
    CHECK(sol.per_scenario.at("upper") == ItemSet{1});
  }

  TEST_CASE("free first stage buys the lowest indices up front") {
    auto sol = solve_two_stage_interval(make({0, 0, 0, 0}, {5, 6, 7, 8}, 2));
    CHECK(sol.objective == 0);
    CHECK(sol.first_stage == ItemSet{0, 1});
    CHECK(sol.per_scenario.at("upper").empty());
  }

  TEST_CASE("cheaper upper bounds push everything to the second stage") {
    auto sol = solve_two_stage_interval(make({9, 9, 9}, {1, 2, 3}, 2));
    CHECK(sol.first_stage.empty());
    CHECK(sol.objective == 3);
    CHECK(sol.per_scenario.at("upper") == ItemSet{0, 1});
  }

  TEST_CASE("cost ties are bought in the first stage") {
    auto sol = solve_two_stage_interval(make({4, 4}, {4, 9}, 1));
    CHECK(sol.first_stage == ItemSet{0});
    CHECK(sol.per_scenario.at("upper").empty());
  }

  TEST_CASE("matches the enumeration oracle exactly") {
    Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(9));  // n <= 10
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      Instance inst = gen_random(n, p, std::nullopt, UncertaintyKind::interval,
                                 0, 50, 5000 + trial);
      CHECK(solve_two_stage_interval(inst).objective ==
            exact_two_stage(inst).objective);
    }
  }

  TEST_CASE("rejects discrete instances and recoverable parameters") {
    Instance discrete;
    discrete.first_stage = {1, 2};
    discrete.p = 1;
    discrete.uncertainty = DiscreteScenarios{{{1, 2}}};
    CHECK_THROWS_AS(solve_two_stage_interval(discrete), MethodMismatchError);

    auto with_k = make({1, 2}, {3, 4}, 1);
    with_k.k = 1;
    CHECK_THROWS_AS(solve_two_stage_interval(with_k), MethodMismatchError);
  }
}
