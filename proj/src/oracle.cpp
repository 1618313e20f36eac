#include "robsched/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace robsched::oracle {

namespace {

void refuse_above(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw InvalidInput(std::string(what) + ": n = " + std::to_string(n) + " exceeds oracle limit " +
                       std::to_string(limit));
}

// Plain recursion over ids; no validation so the permutation loops stay tight.
Time span_of(const std::vector<JobId>& order, const std::vector<Time>& releases,
             const Instance& instance) {
  Time c = std::numeric_limits<Time>::min();
  for (JobId id : order) c = std::max(c, releases[id - 1]) + instance.jobs()[id - 1].p;
  return c;
}

}  // namespace

Time brute_min_makespan(const Scenario& scenario, const Instance& instance) {
  refuse_above(instance.size(), kMaxPermutationJobs, "brute_min_makespan");
  check_scenario(scenario, instance);
  std::vector<JobId> order = identity_schedule(instance.size()).order;
  Time best = std::numeric_limits<Time>::max();
  do {
    best = std::min(best, span_of(order, scenario.releases, instance));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<Scenario> enumerate_feasible_scenarios(const Instance& instance) {
  const std::size_t n = instance.size();
  refuse_above(n, kMaxScenarioGridJobs, "enumerate_feasible_scenarios");
  const auto& jobs = instance.jobs();
  const Time gamma = instance.uncertainty().gamma;
  const bool continuous = instance.uncertainty().kind == UncertaintyKind::U1;

  std::vector<Scenario> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);

    Scenario base;
    for (const Job& job : jobs) base.releases.push_back(job.r_lo);

    if (!continuous) {
      if (static_cast<Time>(members.size()) > gamma) continue;
      for (std::size_t i : members) base.releases[i] = jobs[i].r_hi;
      out.push_back(std::move(base));
      continue;
    }
    do {
      Scenario s = base;
      Time budget = gamma;
      for (std::size_t i : members) {
        const Time raise = std::min(jobs[i].r_hi - jobs[i].r_lo, budget);
        s.releases[i] += raise;
        budget -= raise;
      }
      out.push_back(std::move(s));
    } while (std::next_permutation(members.begin(), members.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScenarioGrid build_grid(const Instance& instance) {
  ScenarioGrid grid;
  grid.scenarios = enumerate_feasible_scenarios(instance);
  grid.optima.reserve(grid.scenarios.size());
  for (const Scenario& s : grid.scenarios) grid.optima.push_back(brute_min_makespan(s, instance));
  return grid;
}

Time brute_worst_makespan(const Schedule& schedule, const ScenarioGrid& grid,
                          const Instance& instance) {
  check_schedule(schedule, instance);
  Time worst = std::numeric_limits<Time>::min();
  for (const Scenario& s : grid.scenarios)
    worst = std::max(worst, span_of(schedule.order, s.releases, instance));
  return worst;
}

Time brute_max_regret(const Schedule& schedule, const ScenarioGrid& grid, const Instance& instance) {
  check_schedule(schedule, instance);
  Time worst = std::numeric_limits<Time>::min();
  for (std::size_t k = 0; k < grid.scenarios.size(); ++k)
    worst = std::max(worst, span_of(schedule.order, grid.scenarios[k].releases, instance) -
                                grid.optima[k]);
  return worst;
}

Time brute_max_regret(const Schedule& schedule, const Instance& instance) {
  return brute_max_regret(schedule, build_grid(instance), instance);
}

BruteOptima brute_robust_optima(const ScenarioGrid& grid, const Instance& instance) {
  refuse_above(instance.size(), kMaxScenarioGridJobs, "brute_robust_optima");
  BruteOptima best{std::numeric_limits<Time>::max(), std::numeric_limits<Time>::max()};
  std::vector<JobId> order = identity_schedule(instance.size()).order;
  do {
    Time worst_span = std::numeric_limits<Time>::min();
    Time worst_regret = std::numeric_limits<Time>::min();
    for (std::size_t k = 0; k < grid.scenarios.size(); ++k) {
      const Time span = span_of(order, grid.scenarios[k].releases, instance);
      worst_span = std::max(worst_span, span);
      worst_regret = std::max(worst_regret, span - grid.optima[k]);
    }
    best.absolute = std::min(best.absolute, worst_span);
    best.regret = std::min(best.regret, worst_regret);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace robsched::oracle
