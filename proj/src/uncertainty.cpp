#include "robsched/uncertainty.hpp"

#include <algorithm>

namespace robsched {

bool is_feasible(const Scenario& scenario, const Instance& instance) {
  check_scenario(scenario, instance);
  const Time gamma = instance.uncertainty().gamma;
  if (instance.uncertainty().kind == UncertaintyKind::U1) {
    Time deviation = 0;
    for (const Job& job : instance.jobs()) {
      deviation += scenario.release(job.id) - job.r_lo;
      if (deviation > gamma) return false;
    }
    return true;
  }
  Time deviating = 0;
  for (const Job& job : instance.jobs())
    if (scenario.release(job.id) != job.r_lo) ++deviating;
  return deviating <= gamma;
}

Instance normalize_u1(const Instance& instance) {
  if (instance.uncertainty().kind != UncertaintyKind::U1) return instance;
  const Time gamma = instance.uncertainty().gamma;
  std::vector<Job> jobs = instance.jobs();
  for (Job& job : jobs)
    if (job.r_hi - job.r_lo > gamma) job.r_hi = job.r_lo + gamma;
  return Instance(std::move(jobs), instance.uncertainty());
}

Instance normalized(const Instance& instance) { return normalize_u1(instance); }

std::pair<Scenario, Scenario> extreme_scenarios(const Instance& instance) {
  Scenario lo, hi;
  lo.releases.reserve(instance.size());
  hi.releases.reserve(instance.size());
  for (const Job& job : instance.jobs()) {
    lo.releases.push_back(job.r_lo);
    hi.releases.push_back(job.r_hi);
  }
  return {std::move(lo), std::move(hi)};
}

Scenario candidate_scenario(const Instance& instance, JobId id) {
  Scenario scenario = extreme_scenarios(instance).first;
  scenario.releases.at(static_cast<std::size_t>(id) - 1) = instance.job(id).r_hi;
  return scenario;
}

CandidateScenarioSet candidate_scenarios(const Instance& instance) {
  CandidateScenarioSet set;
  const Scenario lo = extreme_scenarios(instance).first;
  set.scenarios.reserve(instance.size());
  for (const Job& job : instance.jobs()) {
    Scenario s = lo;
    s.releases[job.id - 1] = job.r_hi;
    set.scenarios.push_back(std::move(s));
  }
  return set;
}

}  // namespace robsched
