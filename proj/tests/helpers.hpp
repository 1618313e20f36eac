#pragma once

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "robsched/core.hpp"
#include "robsched/generate.hpp"

namespace robsched::testing {

// (p, r_lo, r_hi) per job, ids assigned 1..n in order.
inline Instance make_instance(std::vector<std::tuple<Time, Time, Time>> rows,
                              UncertaintyModel model = {UncertaintyKind::U2, 1}) {
  std::vector<Job> jobs;
  JobId id = 1;
  for (auto [p, lo, hi] : rows) jobs.push_back(Job{id++, p, lo, hi});
  return Instance(std::move(jobs), model);
}

// Deterministic instance with r_lo = r_hi = r.
inline Instance make_fixed(std::vector<Time> p, std::vector<Time> r) {
  std::vector<std::tuple<Time, Time, Time>> rows;
  for (std::size_t i = 0; i < p.size(); ++i) rows.emplace_back(p[i], r[i], r[i]);
  return make_instance(rows);
}

inline Schedule sched(std::vector<JobId> order) { return Schedule{std::move(order)}; }
inline Scenario scen(std::vector<Time> releases) { return Scenario{std::move(releases)}; }

inline Schedule random_schedule(std::size_t n, std::mt19937_64& rng) {
  Schedule s = identity_schedule(n);
  for (std::size_t i = n; i > 1; --i)
    std::swap(s.order[i - 1], s.order[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Time>(i - 1)))]);
  return s;
}

inline Scenario random_scenario(const Instance& inst, std::mt19937_64& rng) {
  Scenario s;
  for (const Job& job : inst.jobs()) s.releases.push_back(uniform_int(rng, job.r_lo, job.r_hi));
  return s;
}

inline Instance random_small(std::mt19937_64& rng, std::size_t max_n, UncertaintyModel model,
                             Time max_width = 10) {
  GeneratorConfig config;
  config.n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<Time>(max_n)));
  config.release = {0, 30};
  config.processing = {1, 10};
  config.width = {0, max_width};
  config.model = model;
  return generate_instance(config, rng);
}

}  // namespace robsched::testing
