#include "robsched/absolute.hpp"

#include <algorithm>

#include "robsched/uncertainty.hpp"

namespace robsched {

Time robust_absolute_cost(const Schedule& schedule, const Instance& instance) {
  return makespan(schedule, extreme_scenarios(instance).second, instance);
}

Scenario worst_case_scenario_absolute(const Schedule& schedule, const Instance& instance) {
  const Scenario late = extreme_scenarios(instance).second;
  const ScheduleEvaluation eval = evaluate(schedule, late, instance);
  const JobId critical = schedule.order[eval.critical_position - 1];
  return candidate_scenario(instance, critical);
}

AbsoluteSolution solve_robust_absolute(const Instance& instance) {
  const Instance norm = normalized(instance);
  AbsoluteSolution solution;
  solution.schedule = identity_schedule(norm.size());
  std::stable_sort(solution.schedule.order.begin(), solution.schedule.order.end(),
                   [&](JobId a, JobId b) { return norm.job(a).r_hi < norm.job(b).r_hi; });
  solution.cost = robust_absolute_cost(solution.schedule, norm);
  return solution;
}

}  // namespace robsched
