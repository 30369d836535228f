#pragma once

#include <string>
#include <vector>

#include "core/instance.hpp"

namespace robsel {

// Recomputes feasibility and objective of a recorded solution against its
// instance. Every violated constraint is named; an empty report means the
// record is consistent. The objective must match both the recorded sets and
// the recomputed optimal second stage for the recorded first stage, so a
// tampered objective or a suboptimal set is always caught.
std::vector<std::string> verify_solution(const Instance& inst,
                                         const Solution& sol);

}  // namespace robsel
