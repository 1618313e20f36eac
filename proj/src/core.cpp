#include "robsched/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace robsched {

namespace {

std::string job_label(const Job& job) { return "job " + std::to_string(job.id); }

}  // namespace

Instance::Instance(std::vector<Job> jobs, UncertaintyModel uncertainty)
    : jobs_(std::move(jobs)), uncertainty_(uncertainty) {
  if (jobs_.empty()) throw InvalidInput("instance has no jobs");
  if (uncertainty_.gamma < 0) throw InvalidInput("gamma must be non-negative");
  if (uncertainty_.kind == UncertaintyKind::U2 && uncertainty_.gamma < 1)
    throw InvalidInput("U2 requires gamma >= 1");

  const auto n = jobs_.size();
  if (n > static_cast<std::size_t>(std::numeric_limits<JobId>::max()))
    throw InvalidInput("too many jobs");

  for (const Job& job : jobs_) {
    if (job.id < 1 || static_cast<std::size_t>(job.id) > n)
      throw InvalidInput(job_label(job) + ": id outside 1.." + std::to_string(n));
    if (job.p <= 0) throw InvalidInput(job_label(job) + ": processing time must be positive");
    if (job.r_lo < 0) throw InvalidInput(job_label(job) + ": r_lo must be non-negative");
    if (job.r_lo > job.r_hi) throw InvalidInput(job_label(job) + ": r_lo exceeds r_hi");
  }

  std::sort(jobs_.begin(), jobs_.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (jobs_[i].id == jobs_[i + 1].id) throw InvalidInput(job_label(jobs_[i]) + ": duplicate id");

  // Every completion time is bounded by max r_hi + sum p.
  Time bound = 0;
  for (const Job& job : jobs_) bound = std::max(bound, job.r_hi);
  for (const Job& job : jobs_)
    if (__builtin_add_overflow(bound, job.p, &bound))
      throw InvalidInput("sum of processing times plus max r_hi overflows 64-bit time");
}

void check_schedule(const Schedule& schedule, const Instance& instance) {
  const auto n = instance.size();
  if (schedule.order.size() != n)
    throw InvalidInput("schedule has " + std::to_string(schedule.order.size()) +
                       " entries, instance has " + std::to_string(n) + " jobs");
  std::vector<bool> seen(n, false);
  for (JobId id : schedule.order) {
    if (id < 1 || static_cast<std::size_t>(id) > n)
      throw InvalidInput("schedule references unknown job " + std::to_string(id));
    if (seen[id - 1]) throw InvalidInput("schedule repeats job " + std::to_string(id));
    seen[id - 1] = true;
  }
}

void check_scenario(const Scenario& scenario, const Instance& instance) {
  if (scenario.releases.size() != instance.size())
    throw InvalidInput("scenario has " + std::to_string(scenario.releases.size()) +
                       " releases, instance has " + std::to_string(instance.size()) + " jobs");
  for (const Job& job : instance.jobs()) {
    const Time r = scenario.release(job.id);
    if (r < job.r_lo || r > job.r_hi)
      throw InvalidInput(job_label(job) + ": release " + std::to_string(r) + " outside [" +
                         std::to_string(job.r_lo) + ", " + std::to_string(job.r_hi) + "]");
  }
}

ScheduleEvaluation evaluate(const Schedule& schedule, const Scenario& scenario,
                            const Instance& instance) {
  check_schedule(schedule, instance);
  check_scenario(scenario, instance);

  ScheduleEvaluation eval;
  eval.completions.reserve(schedule.order.size());
  Time c = std::numeric_limits<Time>::min();
  for (JobId id : schedule.order) {
    c = std::max(c, scenario.release(id)) + instance.job(id).p;
    eval.completions.push_back(c);
  }
  eval.makespan = eval.completions.back();
  eval.critical_position = find_critical_job(eval, schedule, scenario, instance);
  return eval;
}

Time makespan(const Schedule& schedule, const Scenario& scenario, const Instance& instance) {
  check_schedule(schedule, instance);
  check_scenario(scenario, instance);
  Time c = std::numeric_limits<Time>::min();
  for (JobId id : schedule.order) c = std::max(c, scenario.release(id)) + instance.job(id).p;
  return c;
}

std::size_t find_critical_job(const ScheduleEvaluation& eval, const Schedule& schedule,
                              const Scenario& scenario, const Instance& instance) {
  for (std::size_t i = schedule.order.size(); i > 1; --i) {
    const JobId id = schedule.order[i - 1];
    if (eval.completions[i - 1] == scenario.release(id) + instance.job(id).p) return i;
  }
  return 1;
}

Schedule erd_schedule(const Scenario& scenario, const Instance& instance) {
  check_scenario(scenario, instance);
  Schedule schedule = identity_schedule(instance.size());
  std::stable_sort(schedule.order.begin(), schedule.order.end(), [&](JobId a, JobId b) {
    return scenario.release(a) < scenario.release(b);
  });
  return schedule;
}

Time optimal_makespan(const Scenario& scenario, const Instance& instance) {
  return makespan(erd_schedule(scenario, instance), scenario, instance);
}

Schedule identity_schedule(std::size_t n) {
  Schedule schedule;
  schedule.order.resize(n);
  std::iota(schedule.order.begin(), schedule.order.end(), JobId{1});
  return schedule;
}

std::string to_string(UncertaintyKind kind) { return kind == UncertaintyKind::U1 ? "U1" : "U2"; }

}  // namespace robsched
