#pragma once

// Value types for single-machine makespan scheduling with interval release
// dates, and the deterministic makespan machinery (recursion, ERD rule,
// critical jobs).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace robsched {

/// Time in integer units. Signed so that differences such as sort keys
/// r_hi - M can go negative without casts.
using Time = std::int64_t;

/// 1-based job identifier.
using JobId = std::int32_t;

/// Raised for malformed or inconsistent inputs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Job {
  JobId id = 0;
  Time p = 0;
  Time r_lo = 0;
  Time r_hi = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

enum class UncertaintyKind { U1, U2 };

/// Budgeted uncertainty. For U1, gamma bounds the summed deviation from the
/// lower release bounds (time units). For U2, gamma bounds the number of jobs
/// that deviate at all and must be at least 1.
struct UncertaintyModel {
  UncertaintyKind kind = UncertaintyKind::U2;
  Time gamma = 1;

  friend bool operator==(const UncertaintyModel&, const UncertaintyModel&) = default;
};

/// A validated problem instance. Jobs are stored by id, so jobs()[j - 1] is
/// job j.
class Instance {
 public:
  /// Validates and takes ownership. Jobs may be given in any order; they are
  /// re-ordered by id. Throws InvalidInput naming the offending job when an
  /// invariant fails (p <= 0, r_lo < 0, r_lo > r_hi, ids not exactly 1..n,
  /// sum p + max r_hi overflowing Time).
  Instance(std::vector<Job> jobs, UncertaintyModel uncertainty);

  std::size_t size() const noexcept { return jobs_.size(); }
  const std::vector<Job>& jobs() const noexcept { return jobs_; }
  const Job& job(JobId id) const { return jobs_.at(static_cast<std::size_t>(id) - 1); }
  const UncertaintyModel& uncertainty() const noexcept { return uncertainty_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Job> jobs_;
  UncertaintyModel uncertainty_;
};

/// One concrete release-date vector; releases[j - 1] is job j's release.
struct Scenario {
  std::vector<Time> releases;

  Time release(JobId id) const { return releases.at(static_cast<std::size_t>(id) - 1); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
  friend auto operator<=>(const Scenario&, const Scenario&) = default;
};

/// A processing order: order[i] is the job processed at position i + 1.
struct Schedule {
  std::vector<JobId> order;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct ScheduleEvaluation {
  std::vector<Time> completions;  // by position
  Time makespan = 0;
  std::size_t critical_position = 1;  // 1-based
};

/// Throws InvalidInput unless `schedule` is a permutation of 1..n.
void check_schedule(const Schedule& schedule, const Instance& instance);

/// Throws InvalidInput unless the scenario has n entries, each inside its
/// job's release interval.
void check_scenario(const Scenario& scenario, const Instance& instance);

/// Completion times by the recursion C_1 = r_1 + p_1,
/// C_i = max(C_{i-1}, r_i) + p_i, plus the makespan and a critical position.
ScheduleEvaluation evaluate(const Schedule& schedule, const Scenario& scenario,
                            const Instance& instance);

/// Makespan only; same recursion as evaluate without allocating.
Time makespan(const Schedule& schedule, const Scenario& scenario, const Instance& instance);

/// Largest 1-based position i with C_i = r_i + p_i. The job there satisfies
/// r + (sum of p from i to n) = makespan.
std::size_t find_critical_job(const ScheduleEvaluation& eval, const Schedule& schedule,
                              const Scenario& scenario, const Instance& instance);

/// Jobs in non-decreasing release order under `scenario`, ties by id.
Schedule erd_schedule(const Scenario& scenario, const Instance& instance);

/// M(scenario): makespan of the ERD schedule, the minimum over all orders.
Time optimal_makespan(const Scenario& scenario, const Instance& instance);

/// The identity schedule 1, 2, ..., n.
Schedule identity_schedule(std::size_t n);

std::string to_string(UncertaintyKind kind);

}  // namespace robsched
