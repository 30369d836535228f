#include <stdexcept>

#include "core/errors.hpp"
#include "core/instance.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "support/enumeration.hpp"

using namespace robsel;

namespace {

Instance interval_instance(std::vector<Cost> first, std::vector<Cost> lower,
                           std::vector<Cost> upper, int p,
                           std::optional<int> k = std::nullopt) {
  Instance inst;
  inst.first_stage = std::move(first);
  inst.uncertainty = IntervalCosts{std::move(lower), std::move(upper)};
  inst.p = p;
  inst.k = k;
  return inst;
}

bool report_mentions(const std::vector<std::string>& report,
                     const std::string& needle) {
  for (const auto& line : report)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("instance") {
  TEST_CASE("validate accepts a well-formed interval instance") {
    auto inst = interval_instance({2, 3, 1, 5}, {1, 0, 0, 1}, {4, 1, 6, 2}, 2);
    CHECK(validate_instance(inst).empty());
  }

  TEST_CASE("validate rejects p = n") {
    auto inst = interval_instance({2, 3, 1, 5}, {0, 0, 0, 0}, {4, 1, 6, 2}, 4);
    CHECK(report_mentions(validate_instance(inst), "p out of range"));
  }

  TEST_CASE("validate names the item with an inverted interval") {
    auto inst = interval_instance({2, 3, 1, 5}, {0, 0, 7, 0}, {4, 1, 2, 9}, 2);
    auto report = validate_instance(inst);
    REQUIRE(!report.empty());
    CHECK(report_mentions(report, "e3"));
    CHECK(report_mentions(report, "inverted interval"));
  }

  TEST_CASE("validate flags bad k and scenario shapes") {
    Instance inst;
    inst.first_stage = {1, 2, 3};
    inst.p = 2;
    inst.k = 3;
    inst.uncertainty = DiscreteScenarios{{{1, 2, 3}, {4, 5}}};
    auto report = validate_instance(inst);
    CHECK(report_mentions(report, "k out of range"));
    CHECK(report_mentions(report, "scenario 1"));
  }

  TEST_CASE("evaluate_cost sums the chosen items") {
    const std::vector<Cost> costs = {2, 3, 1, 5};
    CHECK(evaluate_cost({}, costs) == 0);
    CHECK(evaluate_cost({0, 2}, costs) == 3);
    CHECK(evaluate_cost({0, 1, 2, 3}, std::vector<Cost>{1, 1, 1, 1}) == 4);
    CHECK_THROWS_AS(evaluate_cost({4}, costs), std::out_of_range);
  }

  TEST_CASE("evaluate_cost is additive over disjoint sets") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(7));
      std::vector<Cost> costs(static_cast<size_t>(n));
      for (auto& c : costs) c = static_cast<Cost>(rng.below(30));
      ItemSet a, b;
      for (int e = 0; e < n; ++e) {
        switch (rng.below(3)) {
          case 0: a.push_back(e); break;
          case 1: b.push_back(e); break;
          default: break;
        }
      }
      ItemSet both = set_union(a, b);
      CHECK(evaluate_cost(both, costs) ==
            evaluate_cost(a, costs) + evaluate_cost(b, costs));
    }
  }

  TEST_CASE("best_completion handles the documented cases") {
    SUBCASE("nothing to add when |X| = p") {
      auto pick = best_completion({0, 1}, std::vector<Cost>{9, 2, 9}, 2);
      CHECK(pick.items.empty());
      CHECK(pick.value == 0);
    }
    SUBCASE("picks the cheapest singleton") {
      auto pick = best_completion({}, std::vector<Cost>{9, 2, 9}, 1);
      CHECK(pick.items == ItemSet{1});
      CHECK(pick.value == 2);
    }
    SUBCASE("picks the cheapest pair outside X") {
      auto pick = best_completion({0}, std::vector<Cost>{9, 2, 3, 9}, 3);
      CHECK(pick.items == ItemSet{1, 2});
      CHECK(pick.value == 5);
    }
    SUBCASE("rejects |X| > p") {
      CHECK_THROWS_AS(best_completion({0, 1}, std::vector<Cost>{1, 2, 3}, 1),
                      std::invalid_argument);
    }
  }

  TEST_CASE("best_recovery handles the documented cases") {
    const std::vector<Cost> costs = {4, 1, 6, 2};
    SUBCASE("k = 0 keeps X") {
      auto pick = best_recovery({0, 1}, costs, 2, 0);
      CHECK(pick.items == ItemSet{0, 1});
      CHECK(pick.value == 5);
    }
    SUBCASE("one swap reaches the documented optimum") {
      auto pick = best_recovery({0, 1}, costs, 2, 1);
      CHECK(pick.items == ItemSet{1, 3});
      CHECK(pick.value == 3);
    }
    SUBCASE("k = p frees the second stage entirely") {
      auto pick = best_recovery({0, 2}, costs, 2, 2);
      auto free_pick = best_completion({}, costs, 2);
      CHECK(pick.value == free_pick.value);
    }
    SUBCASE("rejects |X| != p") {
      CHECK_THROWS_AS(best_recovery({0}, costs, 2, 1), std::invalid_argument);
    }
  }

  TEST_CASE("best_completion matches exhaustive enumeration") {
    Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(7));  // n <= 8
      std::vector<Cost> costs(static_cast<size_t>(n));
      for (auto& c : costs) c = static_cast<Cost>(rng.below(20));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      ItemSet x;
      for (int e = 0; e < n && static_cast<int>(x.size()) < p; ++e)
        if (rng.below(2)) x.push_back(e);
      auto pick = best_completion(x, costs, p);
      CHECK(pick.value == testsupport::enum_completion_value(x, costs, p));
      CHECK(static_cast<int>(pick.items.size() + x.size()) == p);
    }
  }

  TEST_CASE("best_recovery matches exhaustive enumeration") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(7));
      std::vector<Cost> costs(static_cast<size_t>(n));
      for (auto& c : costs) c = static_cast<Cost>(rng.below(20));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
      ItemSet x;
      for (int e = n - p; e < n; ++e) x.push_back(e);
      auto pick = best_recovery(x, costs, p, k);
      CHECK(pick.value == testsupport::enum_recovery_value(x, costs, p, k));
      CHECK(static_cast<int>(pick.items.size()) == p);
      CHECK(static_cast<int>(set_difference(pick.items, x).size()) <= k);
    }
  }

  TEST_CASE("best_recovery with k = p equals the unconstrained completion") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(6));
      std::vector<Cost> costs(static_cast<size_t>(n));
      for (auto& c : costs) c = static_cast<Cost>(rng.below(25));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      ItemSet x;
      for (int e = 0; e < p; ++e) x.push_back(e);
      CHECK(best_recovery(x, costs, p, p).value ==
            best_completion({}, costs, p).value);
    }
  }

  TEST_CASE("scenario view is uniform across uncertainty kinds") {
    auto iv = interval_instance({1, 2}, {0, 0}, {5, 6}, 1);
    CHECK(iv.scenario_count() == 1);
    CHECK(iv.scenario_id(0) == "upper");
    CHECK(iv.scenario_costs(0)[1] == 6);

    Instance ds;
    ds.first_stage = {1, 2};
    ds.p = 1;
    ds.uncertainty = DiscreteScenarios{{{3, 4}, {5, 6}}};
    CHECK(ds.scenario_count() == 2);
    CHECK(ds.scenario_id(1) == "1");
    CHECK(ds.scenario_costs(1)[0] == 5);
    CHECK_THROWS_AS(ds.scenario_costs(2), std::out_of_range);
  }
}
