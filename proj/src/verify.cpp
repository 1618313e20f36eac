#include "robsched/verify.hpp"

#include <algorithm>
#include <sstream>

#include "robsched/absolute.hpp"
#include "robsched/generate.hpp"
#include "robsched/io.hpp"
#include "robsched/oracle.hpp"
#include "robsched/regret.hpp"
#include "robsched/uncertainty.hpp"

namespace robsched::verify {

namespace {

std::string join(const std::vector<Time>& values) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < values.size(); ++i) ss << (i ? " " : "") << values[i];
  return ss.str();
}

std::string join(const std::vector<JobId>& values) {
  return join(std::vector<Time>(values.begin(), values.end()));
}

std::string mismatch(const char* what, Time got, Time want) {
  return std::string(what) + ": solver " + std::to_string(got) + ", oracle " + std::to_string(want);
}

}  // namespace

std::optional<Counterexample> verify_instance(const Instance& original, const Options& options) {
  const Instance inst = normalized(original);
  const std::size_t n = inst.size();
  const auto [early, late] = extreme_scenarios(inst);
  const CandidateScenarioSet candidates = candidate_scenarios(inst);

  for (const Scenario& s : candidates.scenarios)
    if (!is_feasible(s, inst))
      return Counterexample{"candidate-feasibility", "candidate scenario exceeds the budget", {}, s};

  if (n <= options.erd_check_limit) {
    std::vector<Scenario> probes{early, late};
    probes.insert(probes.end(), candidates.scenarios.begin(), candidates.scenarios.end());
    for (const Scenario& s : probes) {
      const Time got = optimal_makespan(s, inst);
      const Time want = oracle::brute_min_makespan(s, inst);
      if (got != want) return Counterexample{"erd-optimality", mismatch("M", got, want), {}, s};
    }
  }

  const std::vector<Time> fast = options.fast_M ? options.fast_M(inst) : all_M_fast(inst);
  const std::vector<Time> naive = all_M_naive(inst);
  if (fast.size() != n) return Counterexample{"fast-vs-naive-M", "fast M has wrong length", {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    if (fast[j] != naive[j])
      return Counterexample{"fast-vs-naive-M",
                            "job " + std::to_string(j + 1) + ": " + mismatch("M", fast[j], naive[j]),
                            {},
                            candidates.scenarios[j]};
  }

  if (n > options.full_check_limit) return std::nullopt;

  const oracle::ScenarioGrid grid = oracle::build_grid(inst);
  Schedule perm = identity_schedule(n);
  do {
    // Worst-case scenario for the absolute criterion.
    const Time cost = robust_absolute_cost(perm, inst);
    const Scenario worst = worst_case_scenario_absolute(perm, inst);
    const ScheduleEvaluation late_eval = evaluate(perm, late, inst);
    const ScheduleEvaluation worst_eval = evaluate(perm, worst, inst);
    if (!is_feasible(worst, inst))
      return Counterexample{"absolute-worst-case", "worst-case scenario infeasible", perm, worst};
    if (worst_eval.makespan != late_eval.makespan || cost != late_eval.makespan)
      return Counterexample{"absolute-worst-case",
                            mismatch("makespan vs all-late", worst_eval.makespan, late_eval.makespan),
                            perm, worst};
    const std::size_t pos = late_eval.critical_position;
    const JobId critical = perm.order[pos - 1];
    Time tail = 0;
    for (std::size_t i = pos; i <= n; ++i) tail += inst.job(perm.order[i - 1]).p;
    if (worst.release(critical) + tail != worst_eval.makespan)
      return Counterexample{"absolute-worst-case",
                            "job " + std::to_string(critical) + " is no longer critical", perm, worst};
    const Time grid_worst = oracle::brute_worst_makespan(perm, grid, inst);
    if (cost != grid_worst)
      return Counterexample{"absolute-cost", mismatch("worst makespan", cost, grid_worst), perm, worst};

    // The candidates contain a worst case for the regret criterion.
    const RegretReport report = max_regret(perm, inst, fast);
    const Time grid_regret = oracle::brute_max_regret(perm, grid, inst);
    if (report.regret != grid_regret)
      return Counterexample{"candidate-max-regret", mismatch("max regret", report.regret, grid_regret),
                            perm, candidates.scenarios[report.worst_candidate - 1]};
    if (report.regret < 0)
      return Counterexample{"candidate-max-regret", "negative regret", perm, {}};
  } while (std::next_permutation(perm.order.begin(), perm.order.end()));

  const oracle::BruteOptima best = oracle::brute_robust_optima(grid, inst);
  const AbsoluteSolution abs = solve_robust_absolute(inst);
  if (abs.cost != best.absolute)
    return Counterexample{"absolute-optimality", mismatch("min worst makespan", abs.cost, best.absolute),
                          abs.schedule, {}};
  const RegretReport reg = solve_robust_regret(inst);
  if (reg.regret != best.regret)
    return Counterexample{"regret-optimality", mismatch("min max regret", reg.regret, best.regret),
                          reg.schedule, {}};
  return std::nullopt;
}

std::string describe(const Counterexample& failure, const Instance& instance) {
  std::ostringstream ss;
  ss << "counterexample [" << failure.check << "]: " << failure.detail << '\n';
  if (failure.schedule) ss << "permutation: " << join(failure.schedule->order) << '\n';
  if (failure.scenario) ss << "scenario: " << join(failure.scenario->releases) << '\n';
  ss << "instance:\n" << io::serialize_instance(instance);
  return ss.str();
}

std::vector<Time> corrupted_all_M(const Instance& instance) {
  std::vector<Time> m = all_M_fast(instance);
  const Time base = build_slack_profile(instance).M0;
  for (Time& v : m)
    if (v > base) --v;
  return m;
}

Instance random_oracle_instance(std::mt19937_64& rng, std::size_t max_n) {
  GeneratorConfig config;
  config.n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<Time>(max_n)));
  config.release = {0, 30};
  config.processing = {1, 10};
  config.width = {0, uniform_int(rng, 0, 1) ? 15 : 4};
  if (uniform_int(rng, 0, 1)) {
    config.model = {UncertaintyKind::U1, uniform_int(rng, 0, 30)};
  } else {
    const Time choices[] = {1, 2, static_cast<Time>(config.n)};
    config.model = {UncertaintyKind::U2, choices[uniform_int(rng, 0, 2)]};
  }
  return generate_instance(config, rng);
}

}  // namespace robsched::verify
