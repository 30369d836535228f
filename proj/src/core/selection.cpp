#include "core/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace robsel {

ItemSet select_p_smallest(std::span<const Cost> costs, int p) {
  const int n = static_cast<int>(costs.size());
  if (p < 0 || p > n)
    throw std::invalid_argument("select_p_smallest: p out of range");
  ItemSet idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  if (p < n)
    std::nth_element(idx.begin(), idx.begin() + p, idx.end(),
                     [&](int a, int b) {
                       const auto ca = costs[static_cast<size_t>(a)];
                       const auto cb = costs[static_cast<size_t>(b)];
                       return ca != cb ? ca < cb : a < b;
                     });
  idx.resize(static_cast<size_t>(p));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace robsel
