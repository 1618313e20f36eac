#pragma once

#include <vector>

#include "robsched/core.hpp"

namespace robsched {

/// ERD data for the all-early scenario (every release at r_lo).
///
/// All vectors are indexed by 0-based position in `order`, which lists the
/// jobs by (r_lo, id). With C_0 = 0:
///   C[i]   = max(C[i-1], r_lo[i]) + p[i]
///   eps[i] = C[i] - (r_lo[i] + p[i])          slack behind the earliest finish
///   idle[i] = max(r_lo[i] - C[i-1], 0)        machine idle right before i
///   suffix_idle[i] = sum of idle[s] for s > i
struct SlackProfile {
  std::vector<JobId> order;
  std::vector<Time> r_lo;
  std::vector<Time> r_hi;
  std::vector<Time> p;
  std::vector<Time> C;
  std::vector<Time> eps;
  std::vector<Time> idle;
  std::vector<Time> suffix_idle;
  Time M0 = 0;
};

SlackProfile build_slack_profile(const Instance& instance);

/// makespan(schedule, scenario) - optimal_makespan(scenario); never negative.
Time regret_of(const Schedule& schedule, const Scenario& scenario, const Instance& instance);

/// M(xi_j) for every job, indexed by id - 1, in O(n log n).
///
/// With jobs in (r_lo, id) order, raising job j to r_hi moves it behind
/// u_j = max{k : r_lo(k) <= r_hi(j)}. The jobs j+1..u_j each finish earlier
/// by min{p_j, eps_{j+1}, ..., eps_s}, so position u_j loses
/// m_j = min{p_j, eps_{j+1..u_j}} (m_j = p_j when u_j = j). Job j then
/// finishes h_j = p_j - m_j + max{0, r_hi(j) - C_{u_j} + m_j} after the old
/// C_{u_j}, and that delay is absorbed by the idle time that follows:
///   M(xi_j) = M0 + max{h_j - suffix_idle_{u_j}, 0}.
/// Precondition: `instance` is normalized.
std::vector<Time> all_M_fast(const Instance& instance);

/// Reference for all_M_fast: for each j, builds the ERD order of xi_j by
/// merging job j into the (r_lo, id) order and runs the full makespan
/// recursion. O(n^2). Precondition: `instance` is normalized.
std::vector<Time> all_M_naive(const Instance& instance);

struct RegretReport {
  Schedule schedule;
  Time regret = 0;
  JobId worst_candidate = 1;        // smallest id attaining `regret`
  std::vector<Time> per_candidate;  // R(schedule, xi_j) by id - 1
};

/// Maximum regret of `schedule` over the candidates xi_j, which contain a
/// worst case for every schedule. Uses
///   makespan(pi, xi_j) = max{makespan(pi, xi_lo), r_hi(j) + tail(pos(j))}
/// where tail(i) is the processing time from position i to the end.
/// Precondition: `instance` is normalized.
RegretReport max_regret(const Schedule& schedule, const Instance& instance);

/// Same as max_regret with M(xi_j) supplied by the caller (indexed by id - 1).
RegretReport max_regret(const Schedule& schedule, const Instance& instance,
                        const std::vector<Time>& candidate_optima);

/// Optimal robust-regret schedule: jobs by non-decreasing r_hi(j) - M(xi_j),
/// ties by id. Normalizes U1 instances internally.
RegretReport solve_robust_regret(const Instance& instance);

}  // namespace robsched
