#pragma once

// Brute-force references. Everything here enumerates permutations or
// scenarios outright and shares no code path with the solvers beyond the
// value types and the makespan recursion.

#include <cstddef>
#include <vector>

#include "robsched/core.hpp"

namespace robsched::oracle {

inline constexpr std::size_t kMaxPermutationJobs = 10;
inline constexpr std::size_t kMaxScenarioGridJobs = 7;

/// Minimum makespan over all n! orders. Refuses n > kMaxPermutationJobs.
Time brute_min_makespan(const Scenario& scenario, const Instance& instance);

/// Finite grid of budget-feasible extreme scenarios.
///   U2: every set S with |S| <= gamma raised to r_hi, everyone else at r_lo.
///   U1: every set S and every order of S, raising each member in turn to
///       min(r_hi, r_lo + remaining budget).
/// Makespan is monotone in the releases, so the grid attains the worst case
/// over the full set. Duplicates removed; sorted. Refuses
/// n > kMaxScenarioGridJobs.
std::vector<Scenario> enumerate_feasible_scenarios(const Instance& instance);

/// The grid together with each scenario's brute-force optimum.
struct ScenarioGrid {
  std::vector<Scenario> scenarios;
  std::vector<Time> optima;
};

ScenarioGrid build_grid(const Instance& instance);

Time brute_worst_makespan(const Schedule& schedule, const ScenarioGrid& grid,
                          const Instance& instance);
Time brute_max_regret(const Schedule& schedule, const ScenarioGrid& grid, const Instance& instance);
Time brute_max_regret(const Schedule& schedule, const Instance& instance);

/// Minima over all n! schedules of the two robust objectives on the grid.
struct BruteOptima {
  Time absolute = 0;
  Time regret = 0;
};

BruteOptima brute_robust_optima(const ScenarioGrid& grid, const Instance& instance);

}  // namespace robsched::oracle
