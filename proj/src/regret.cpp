#include "robsched/regret.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

#include "robsched/rmq.hpp"
#include "robsched/uncertainty.hpp"

namespace robsched {

namespace {

// Positions in jobs() (id order) sorted by (r_lo, id).
std::vector<std::pair<Time, std::uint32_t>> sorted_by_r_lo(const Instance& instance) {
  const std::vector<Job>& jobs = instance.jobs();
  std::vector<std::pair<Time, std::uint32_t>> keys(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) keys[i] = {jobs[i].r_lo, static_cast<std::uint32_t>(i)};
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

SlackProfile build_slack_profile(const Instance& instance) {
  const std::size_t n = instance.size();
  const auto sorted = sorted_by_r_lo(instance);
  SlackProfile prof;
  prof.order.resize(n);
  prof.r_lo.resize(n);
  prof.r_hi.resize(n);
  prof.p.resize(n);
  prof.C.resize(n);
  prof.eps.resize(n);
  prof.idle.resize(n);
  prof.suffix_idle.resize(n);

  Time prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Job& job = instance.jobs()[sorted[i].second];
    prof.order[i] = job.id;
    prof.r_lo[i] = job.r_lo;
    prof.r_hi[i] = job.r_hi;
    prof.p[i] = job.p;
    prof.idle[i] = std::max<Time>(job.r_lo - prev, 0);
    prof.C[i] = std::max(prev, job.r_lo) + job.p;
    prof.eps[i] = prof.C[i] - (job.r_lo + job.p);
    prev = prof.C[i];
  }
  prof.suffix_idle[n - 1] = 0;
  for (std::size_t i = n - 1; i > 0; --i) prof.suffix_idle[i - 1] = prof.suffix_idle[i] + prof.idle[i];
  prof.M0 = prof.C[n - 1];
  return prof;
}

Time regret_of(const Schedule& schedule, const Scenario& scenario, const Instance& instance) {
  return makespan(schedule, scenario, instance) - optimal_makespan(scenario, instance);
}

std::vector<Time> all_M_fast(const Instance& instance) {
  const SlackProfile prof = build_slack_profile(instance);
  const std::size_t n = prof.order.size();
  const IntervalMinTable eps_min(prof.eps);

  std::vector<Time> result(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const Time p = prof.p[j - 1];
    const Time r_hi = prof.r_hi[j - 1];
    // 1-based u_j; r_lo(j) <= r_hi(j) guarantees u >= j.
    const std::size_t u = static_cast<std::size_t>(
        std::upper_bound(prof.r_lo.begin(), prof.r_lo.end(), r_hi) - prof.r_lo.begin());
    Time m = p;
    if (u > j) m = std::min(m, eps_min.range_min(j + 1, u));
    const Time c_u = prof.C[u - 1];
    const Time h = p - m + std::max<Time>(0, r_hi - c_u + m);
    result[prof.order[j - 1] - 1] = prof.M0 + std::max<Time>(h - prof.suffix_idle[u - 1], 0);
  }
  return result;
}

std::vector<Time> all_M_naive(const Instance& instance) {
  const auto keys = sorted_by_r_lo(instance);
  const std::size_t n = keys.size();
  std::vector<Job> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = instance.jobs()[keys[i].second];
  std::vector<JobId> order(n);
  std::vector<Time> r_lo(n), p(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = sorted[i].id;
    r_lo[i] = sorted[i].r_lo;
    p[i] = sorted[i].p;
  }

  std::vector<Time> result(n);
  for (const Job& raised : instance.jobs()) {
    // ERD order of xi_j, compared by (release, id): job j goes in front of
    // the first other job that compares greater.
    bool placed = false;
    Time c = std::numeric_limits<Time>::min();
    for (std::size_t i = 0; i < n; ++i) {
      const JobId id = order[i];
      if (id == raised.id) continue;
      if (!placed && (r_lo[i] > raised.r_hi || (r_lo[i] == raised.r_hi && id > raised.id))) {
        c = std::max(c, raised.r_hi) + raised.p;
        placed = true;
      }
      c = std::max(c, r_lo[i]) + p[i];
    }
    if (!placed) c = std::max(c, raised.r_hi) + raised.p;
    result[raised.id - 1] = c;
  }
  return result;
}

RegretReport max_regret(const Schedule& schedule, const Instance& instance) {
  return max_regret(schedule, instance, all_M_fast(instance));
}

RegretReport max_regret(const Schedule& schedule, const Instance& instance,
                        const std::vector<Time>& candidate_optima) {
  check_schedule(schedule, instance);
  const std::size_t n = instance.size();
  if (candidate_optima.size() != n) throw InvalidInput("max_regret: need one optimum per job");

  const Scenario early = extreme_scenarios(instance).first;
  const Time base = makespan(schedule, early, instance);

  RegretReport report;
  report.schedule = schedule;
  report.per_candidate.resize(n);
  Time tail = 0;
  for (std::size_t i = n; i > 0; --i) {
    const Job& job = instance.job(schedule.order[i - 1]);
    tail += job.p;
    const Time span = std::max(base, job.r_hi + tail);
    report.per_candidate[job.id - 1] = span - candidate_optima[job.id - 1];
  }
  const auto worst = std::max_element(report.per_candidate.begin(), report.per_candidate.end());
  report.regret = *worst;
  report.worst_candidate = static_cast<JobId>(worst - report.per_candidate.begin()) + 1;
  return report;
}

RegretReport solve_robust_regret(const Instance& instance) {
  const Instance norm = normalized(instance);
  const std::vector<Time> optima = all_M_fast(norm);

  Schedule schedule = identity_schedule(norm.size());
  std::stable_sort(schedule.order.begin(), schedule.order.end(), [&](JobId a, JobId b) {
    return norm.job(a).r_hi - optima[a - 1] < norm.job(b).r_hi - optima[b - 1];
  });
  return max_regret(schedule, norm, optima);
}

}  // namespace robsched
