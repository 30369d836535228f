#include "core/generators.hpp"
#include "core/oracle.hpp"
#include "core/recoverable_interval.hpp"
#include "core/rng.hpp"
#include "core/two_stage_discrete.hpp"
#include "core/two_stage_interval.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using namespace robsel;

namespace {

bool mentions(const std::vector<std::string>& report, const std::string& s) {
  for (const auto& line : report)
    if (line.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("solver output round-trips through the verifier") {
    Rng rng(113);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(6));
      const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p) + 1));
      Instance rec = gen_random(n, p, k, UncertaintyKind::interval, 0, 30,
                                15000 + trial);
      CHECK(verify_solution(rec, solve_recoverable_interval(rec)).empty());
      CHECK(verify_solution(rec, exact_recoverable(rec)).empty());

      Instance ts = gen_random(n, p, std::nullopt, UncertaintyKind::interval,
                               0, 30, 16000 + trial);
      CHECK(verify_solution(ts, solve_two_stage_interval(ts)).empty());
      CHECK(verify_solution(ts, exact_two_stage(ts)).empty());
    }
  }

  TEST_CASE("a tampered objective is caught") {
    Instance inst = gen_random(6, 2, 1, UncertaintyKind::interval, 0, 9, 77);
    Solution sol = solve_recoverable_interval(inst);
    sol.objective -= 1;
    CHECK(mentions(verify_solution(inst, sol), "objective"));
  }

  TEST_CASE("overlap between stages is named") {
    Instance inst;
    inst.first_stage = {1, 2, 3};
    inst.p = 2;
    inst.uncertainty = DiscreteScenarios{{{4, 5, 6}}};
    Solution sol;
    sol.first_stage = {0};
    sol.per_scenario["0"] = {0};  // same item in both stages
    sol.objective = 5;
    CHECK(mentions(verify_solution(inst, sol), "disjointness"));
  }

  TEST_CASE("a suboptimal recorded second stage is caught") {
    Instance inst;
    inst.first_stage = {0, 0, 0};
    inst.p = 1;
    inst.uncertainty = DiscreteScenarios{{{1, 9, 9}}};
    Solution sol;
    sol.per_scenario["0"] = {1};  // cost 9, optimum is 1
    sol.objective = 9;            // matches the sets but not the optimum
    CHECK(mentions(verify_solution(inst, sol), "recomputed optimum"));
  }

  TEST_CASE("structural defects are reported") {
    Instance inst = gen_random(5, 2, 1, UncertaintyKind::interval, 0, 9, 3);
    Solution sol = solve_recoverable_interval(inst);

    SUBCASE("wrong first-stage size") {
      sol.first_stage.pop_back();
      CHECK(mentions(verify_solution(inst, sol), "expected exactly p"));
    }
    SUBCASE("missing scenario record") {
      sol.per_scenario.clear();
      CHECK(mentions(verify_solution(inst, sol), "missing set"));
    }
    SUBCASE("unknown scenario id") {
      sol.per_scenario["banana"] = {0};
      CHECK(mentions(verify_solution(inst, sol), "unknown scenario id"));
    }
    SUBCASE("index out of range") {
      sol.first_stage[0] = 99;
      CHECK(mentions(verify_solution(inst, sol), "out of range"));
    }
    SUBCASE("too many swaps") {
      Instance tight = inst;
      tight.k = 0;
      Solution fixed = solve_recoverable_interval(tight);
      ItemSet outside;
      for (int e = 0; e < tight.n(); ++e)
        if (!set_contains(fixed.first_stage, e)) outside.push_back(e);
      REQUIRE(!outside.empty());
      auto& y = fixed.per_scenario.at("upper");
      y.erase(y.begin());
      y.push_back(outside.front());
      std::sort(y.begin(), y.end());
      CHECK(mentions(verify_solution(tight, fixed), "exceeds k"));
    }
  }

  TEST_CASE("discrete two-stage records verify per scenario") {
    Instance inst = gen_random(6, 3, std::nullopt, UncertaintyKind::discrete,
                               3, 9, 55);
    RoundingParams params;
    params.seed = 5;
    Solution sol = solve_two_stage_discrete(inst, params);
    CHECK(verify_solution(inst, sol).empty());

    // Dropping one scenario's set breaks the record.
    sol.per_scenario.erase("1");
    CHECK(mentions(verify_solution(inst, sol), "missing set"));
  }
}
