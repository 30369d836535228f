#pragma once

#include "core/instance.hpp"

namespace robsel {

// Exact linear-time solver for the two-stage model under interval
// uncertainty. Takes each item at the cheaper of its first-stage cost and its
// upper bound: the p smallest of those values are optimal, items bought first
// stage when C_e <= upper_e, second stage otherwise.
Solution solve_two_stage_interval(const Instance& inst);

}  // namespace robsel
