#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "core/instance.hpp"

namespace robsel {

enum class UncertaintyKind { interval, discrete };

// Uniform random instance: integer costs in [0, cost_bound], intervals with
// lower <= upper, deterministic per seed.
Instance gen_random(int n, int p, std::optional<int> k, UncertaintyKind kind,
                    int num_scenarios, Cost cost_bound, std::uint64_t seed);

// Balanced-partition reduction to recoverable selection (two scenarios).
// Input a has even size 2n and even sum 2b; the output has 2n partition items
// (first stage M1 = 4nb, scenario costs b + a_i and b + 2b/n - a_i), k free
// items that cost M2 = 2n*M1 second stage, and k recovery items priced the
// other way around; p = n + k. When 2b/n is fractional all costs are scaled
// by n; meta records the scale and the yes-instance threshold
// scale * (n*M1 + (n+1)*b).
Instance gen_rec_partition(const std::vector<std::int64_t>& a, int k);

// Balanced-partition reduction to two-stage selection (three scenarios).
// Input a has even size n, all entries positive; items e_i cost 3b + a_i
// first stage and (2a_i, 6b/n - a_i, M) under the scenarios, plus n/2 filler
// items that are free only under the third scenario; M = 4nb, p = n. Scaled
// integrally when b or 6b/n is fractional; meta records the scale and the
// threshold scale * (3n/2 + 3) * b.
Instance gen_ts_partition(const std::vector<std::int64_t>& a);

// 3-SAT reduction to recoverable selection. One item per (clause, literal)
// slot plus one recovery item r (first-stage cost = variable count; all other
// first-stage costs zero). One scenario per pair of contradictory literal
// occurrences (both items cost 1), ordered lexicographically by (clause,
// position) pairs, followed by one scenario per clause (its three items cost
// 1). p = clause count, k = 1. Satisfiable formulas have optimum 0.
Instance gen_three_sat(const std::vector<std::array<int, 3>>& clauses,
                       int num_vars);

// Set-cover reduction to two-stage selection. An item per family set (first
// stage 1) and one filler item per family set (first stage M = |U| * m).
// Scenario S_i per universe element i: set items containing i cost M, the
// first r_i fillers are free where r_i counts the sets containing i, the rest
// cost M. p = m + 1; the optimum equals the minimum cover size. Universe
// elements are 1..universe_size.
Instance gen_set_cover(int universe_size,
                       const std::vector<std::vector<int>>& sets);

}  // namespace robsel
