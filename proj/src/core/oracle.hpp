#pragma once

#include <cstdint>

#include "core/instance.hpp"

namespace robsel {

// Both problems are NP-hard under discrete scenarios, so exhaustive search is
// the ground truth at desk scale only. The limits are explicit; exceeding
// either throws CapExceededError.
struct OracleLimits {
  int max_items = 20;
  std::uint64_t max_subsets = 50'000'000;
};

// Exhaustive two-stage optimum: every first-stage set of size <= p, priced
// per scenario with its optimal completion; returns the min-max set.
// Interval instances are evaluated against the all-upper scenario. Accepts
// 1 <= p <= n (degenerate reduction outputs may have p = n).
Solution exact_two_stage(const Instance& inst, const OracleLimits& limits = {});

// Exhaustive recoverable optimum: every first-stage set of size exactly p,
// priced per scenario with its optimal k-swap recovery.
Solution exact_recoverable(const Instance& inst, const OracleLimits& limits = {});

}  // namespace robsel
