#pragma once

#include <span>

#include "core/instance.hpp"

namespace robsel {

// The p items of smallest cost, expected linear time via nth_element on
// (cost, index) pairs. Equal costs resolve to the smaller index, so the
// result is deterministic. Throws std::invalid_argument unless 0 <= p <= n.
ItemSet select_p_smallest(std::span<const Cost> costs, int p);

}  // namespace robsel
