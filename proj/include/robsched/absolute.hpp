#pragma once

#include "robsched/core.hpp"

namespace robsched {

/// Worst-case makespan of `schedule` over the budgeted set. Equal to the
/// makespan under all-late releases, because moving everyone except the
/// all-late critical job back to r_lo keeps that makespan and fits any
/// budget once the instance is normalized.
/// Precondition: `instance` is normalized.
Time robust_absolute_cost(const Schedule& schedule, const Instance& instance);

/// A feasible scenario attaining robust_absolute_cost: the critical job of
/// `schedule` under all-late releases sits at r_hi, everyone else at r_lo.
/// That job stays critical under the returned scenario.
/// Precondition: `instance` is normalized.
Scenario worst_case_scenario_absolute(const Schedule& schedule, const Instance& instance);

struct AbsoluteSolution {
  Schedule schedule;
  Time cost = 0;
};

/// Optimal robust-absolute schedule: jobs by non-decreasing (normalized)
/// r_hi, ties by id. Normalizes U1 instances internally.
AbsoluteSolution solve_robust_absolute(const Instance& instance);

}  // namespace robsched
