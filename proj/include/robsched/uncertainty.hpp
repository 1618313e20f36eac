#pragma once

#include <utility>
#include <vector>

#include "robsched/core.hpp"

namespace robsched {

/// Budget feasibility of a scenario that already lies inside the intervals.
/// U1: total deviation from r_lo is at most gamma. U2: at most gamma jobs
/// deviate from r_lo.
bool is_feasible(const Scenario& scenario, const Instance& instance);

/// For U1, clips every r_hi to r_lo + gamma, after which each single-job
/// deviation fits the budget. U2 instances are returned unchanged.
Instance normalize_u1(const Instance& instance);

/// Applies normalize_u1 when the model is U1, otherwise copies.
Instance normalized(const Instance& instance);

/// Releases at r_lo for every job (xi_lo) and at r_hi for every job
/// (xi_hi). xi_hi is usually outside the budget but still a valid argument
/// to evaluate().
std::pair<Scenario, Scenario> extreme_scenarios(const Instance& instance);

/// xi_j: job j at r_hi, everyone else at r_lo.
Scenario candidate_scenario(const Instance& instance, JobId id);

/// The n candidate scenarios; element j - 1 is xi_j.
struct CandidateScenarioSet {
  std::vector<Scenario> scenarios;
};

CandidateScenarioSet candidate_scenarios(const Instance& instance);

}  // namespace robsched
