#include "core/two_stage_interval.hpp"

#include "core/errors.hpp"
#include "core/selection.hpp"

namespace robsel {

Solution solve_two_stage_interval(const Instance& inst) {
  if (!inst.is_interval())
    throw MethodMismatchError(
        "solve_two_stage_interval: needs an interval instance");
  if (inst.k)
    throw MethodMismatchError(
        "solve_two_stage_interval: instance carries a recovery parameter");
  require_valid(inst);

  const int n = inst.n();
  const auto& upper = inst.interval().upper;
  std::vector<Cost> cheaper(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e)
    cheaper[static_cast<size_t>(e)] =
        std::min(inst.first_stage[static_cast<size_t>(e)],
                 upper[static_cast<size_t>(e)]);

  const ItemSet z = select_p_smallest(cheaper, inst.p);
  Solution sol;
  sol.method = "ts-interval";
  Cost objective = 0;
  ItemSet y;
  for (int e : z) {
    objective += cheaper[static_cast<size_t>(e)];
    if (inst.first_stage[static_cast<size_t>(e)] <= upper[static_cast<size_t>(e)])
      sol.first_stage.push_back(e);  // ties go to the first stage
    else
      y.push_back(e);
  }
  sol.per_scenario["upper"] = std::move(y);
  sol.objective = objective;
  return sol;
}

}  // namespace robsel
