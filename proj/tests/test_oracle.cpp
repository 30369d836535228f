#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"
#include "core/selection.hpp"
#include "core/two_stage_interval.hpp"
#include "doctest.h"
#include "support/enumeration.hpp"

using namespace robsel;

namespace {

Instance i2() {
  Instance inst;
  inst.first_stage = {1, 5, 5};
  inst.p = 1;
  inst.uncertainty = DiscreteScenarios{{{9, 2, 9}, {9, 9, 3}}};
  return inst;
}

Instance degenerate_intervals(const Instance& discrete) {
  // Intervals pinned to the single scenario's values.
  Instance inst = discrete;
  const auto& row = discrete.discrete().scenarios.at(0);
  inst.uncertainty = IntervalCosts{row, row};
  return inst;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("two-stage optimum of the documented three-item instance") {
    auto sol = exact_two_stage(i2());
    CHECK(sol.objective == 1);
    CHECK(sol.first_stage == ItemSet{0});
  }

  TEST_CASE("single-scenario instances equal degenerate interval solving") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(7));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      Instance inst = gen_random(n, p, std::nullopt, UncertaintyKind::discrete,
                                 1, 20, 9000 + trial);
      CHECK(exact_two_stage(inst).objective ==
            solve_two_stage_interval(degenerate_intervals(inst)).objective);
    }
  }

  TEST_CASE("degenerate intervals match the discrete single scenario") {
    Rng rng(73);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(6));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      Instance inst = gen_random(n, p, std::nullopt, UncertaintyKind::discrete,
                                 1, 15, 9500 + trial);
      CHECK(exact_two_stage(inst).objective ==
            exact_two_stage(degenerate_intervals(inst)).objective);
    }
  }

  TEST_CASE("the empty first stage bounds the two-stage optimum") {
    Rng rng(79);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(6));
      Instance inst = gen_random(n, 1, std::nullopt, UncertaintyKind::discrete,
                                 3, 25, 9900 + trial);
      Cost bound = 0;  // max over scenarios of the cheapest single item
      for (int s = 0; s < inst.scenario_count(); ++s) {
        Cost cheapest = std::numeric_limits<Cost>::max();
        for (Cost c : inst.scenario_costs(s)) cheapest = std::min(cheapest, c);
        bound = std::max(bound, cheapest);
      }
      CHECK(exact_two_stage(inst).objective <= bound);
    }
  }

  TEST_CASE("recoverable optimum of the worked interval instance") {
    Instance inst;
    inst.first_stage = {2, 3, 1, 5};
    inst.uncertainty = IntervalCosts{{0, 0, 0, 0}, {4, 1, 6, 2}};
    inst.p = 2;
    inst.k = 1;
    auto sol = exact_recoverable(inst);
    CHECK(sol.objective == 7);
    CHECK(sol.first_stage == ItemSet{1, 2});
  }

  TEST_CASE("k = 0 with free first stage is plain min-max selection") {
    Rng rng(83);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(6));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      Instance inst = gen_random(n, p, 0, UncertaintyKind::discrete, 3, 9,
                                 10000 + trial);
      std::fill(inst.first_stage.begin(), inst.first_stage.end(), 0);
      // Direct min-max enumeration, no recovery involved.
      Cost direct = std::numeric_limits<Cost>::max();
      for (const auto& x : testsupport::subsets_of_size(n, p)) {
        Cost worst = 0;
        for (int s = 0; s < inst.scenario_count(); ++s)
          worst = std::max(worst, testsupport::plain_sum(
                                      x, testsupport::scenario_vector(inst, s)));
        direct = std::min(direct, worst);
      }
      CHECK(exact_recoverable(inst).objective == direct);
    }
  }

  TEST_CASE("k = p decouples the two stages on interval instances") {
    Rng rng(89);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(6));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      Instance inst = gen_random(n, p, p, UncertaintyKind::interval, 0, 25,
                                 11000 + trial);
      auto first = select_p_smallest(inst.first_stage, p);
      auto second = select_p_smallest(inst.interval().upper, p);
      CHECK(exact_recoverable(inst).objective ==
            testsupport::plain_sum(first, inst.first_stage) +
                testsupport::plain_sum(second, inst.interval().upper));
    }
  }

  TEST_CASE("recoverable optimum never improves when k shrinks") {
    Rng rng(97);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(5));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      Instance inst = gen_random(n, p, 0, UncertaintyKind::discrete, 2, 15,
                                 12000 + trial);
      Cost prev = std::numeric_limits<Cost>::max();
      for (int k = 0; k <= p; ++k) {
        inst.k = k;
        const Cost opt = exact_recoverable(inst).objective;
        CHECK(opt <= prev);
        prev = opt;
      }
    }
  }

  TEST_CASE("both oracles agree with the test-side enumerations") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(6));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      const int K = 1 + static_cast<int>(rng.below(3));
      Instance two_stage = gen_random(n, p, std::nullopt,
                                      UncertaintyKind::discrete, K, 12,
                                      13000 + trial);
      CHECK(exact_two_stage(two_stage).objective ==
            testsupport::enum_two_stage_opt(two_stage));

      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
      Instance recoverable = gen_random(n, p, k, UncertaintyKind::discrete, K,
                                        12, 14000 + trial);
      CHECK(exact_recoverable(recoverable).objective ==
            testsupport::enum_recoverable_opt(recoverable));
    }
  }

  TEST_CASE("enumeration caps are enforced") {
    Instance big = gen_random(25, 12, std::nullopt, UncertaintyKind::discrete,
                              2, 9, 5);
    CHECK_THROWS_AS(exact_two_stage(big), CapExceededError);

    OracleLimits loose;
    loose.max_items = 30;
    loose.max_subsets = 10;  // still too much work
    Instance small = gen_random(8, 4, std::nullopt, UncertaintyKind::discrete,
                                2, 9, 6);
    CHECK_THROWS_AS(exact_two_stage(small, loose), CapExceededError);
  }
}
