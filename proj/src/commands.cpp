#include "robsched/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "robsched/absolute.hpp"
#include "robsched/regret.hpp"
#include "robsched/uncertainty.hpp"

namespace robsched::cli {

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
double best_of(std::size_t repeats, F&& f) {
  double best = seconds(f);
  for (std::size_t i = 1; i < repeats; ++i) best = std::min(best, seconds(f));
  return best;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

io::SolutionFile solve(const Instance& instance, io::Criterion criterion) {
  io::SolutionFile sol;
  sol.criterion = criterion;
  if (criterion == io::Criterion::Absolute) {
    const Instance norm = normalized(instance);
    AbsoluteSolution abs = solve_robust_absolute(norm);
    sol.worst_scenario = worst_case_scenario_absolute(abs.schedule, norm);
    const ScheduleEvaluation eval = evaluate(abs.schedule, sol.worst_scenario, norm);
    sol.worst_candidate = abs.schedule.order[eval.critical_position - 1];
    sol.objective = abs.cost;
    sol.schedule = std::move(abs.schedule);
  } else {
    const Instance norm = normalized(instance);
    RegretReport report = solve_robust_regret(norm);
    sol.objective = report.regret;
    sol.worst_candidate = report.worst_candidate;
    sol.worst_scenario = candidate_scenario(norm, report.worst_candidate);
    sol.per_candidate = std::move(report.per_candidate);
    sol.schedule = std::move(report.schedule);
  }
  return sol;
}

int cmd_solve(io::Criterion criterion, const std::filesystem::path& input,
              const std::filesystem::path& output, std::ostream& err) {
  try {
    const Instance instance = io::parse_instance(io::read_file(input));
    const io::SolutionFile sol = solve(instance, criterion);
    io::write_file(output, io::serialize_solution(sol));
    return kOk;
  } catch (const std::exception& e) {
    err << "solve: " << input.string() << ": " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_generate(const GeneratorConfig& config, std::uint64_t seed,
                 const std::filesystem::path& output, std::ostream& err) {
  try {
    io::write_file(output, io::serialize_instance(generate_instance(config, seed)));
    return kOk;
  } catch (const std::exception& e) {
    err << "generate: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_verify(const std::optional<std::filesystem::path>& input, std::size_t trials,
               std::uint64_t seed, const verify::Options& options, std::ostream& out,
               std::ostream& err) {
  std::size_t checked = 0;
  auto run = [&](const Instance& instance, const std::string& label) {
    const auto failure = verify::verify_instance(instance, options);
    ++checked;
    if (failure) {
      err << label << '\n' << verify::describe(*failure, instance);
      return false;
    }
    return true;
  };

  if (input) {
    std::optional<Instance> instance;
    try {
      instance = io::parse_instance(io::read_file(*input));
    } catch (const std::exception& e) {
      err << "verify: " << input->string() << ": " << e.what() << '\n';
      return kUsageError;
    }
    if (!run(*instance, "verify: " + input->string())) return kCounterexample;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Instance instance = verify::random_oracle_instance(rng, options.full_check_limit);
    if (!run(instance, "verify: random trial " + std::to_string(t) + " (seed " + std::to_string(seed) + ")"))
      return kCounterexample;
  }
  out << "verify: " << checked << " instance(s) passed\n";
  return kOk;
}

GeneratorConfig bench_config(std::size_t n) {
  GeneratorConfig config;
  config.n = n;
  config.release = {0, static_cast<Time>(5 * n)};
  config.processing = {1, 10};
  config.width = {0, 50};
  config.model = {UncertaintyKind::U2, 1};
  return config;
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                std::size_t naive_limit, std::size_t repeats) {
  repeats = std::max<std::size_t>(repeats, 1);
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    const Instance instance = generate_instance(bench_config(n), seed + n);
    BenchRow row;
    row.n = n;
    row.absolute_s = best_of(repeats, [&] { (void)solve_robust_absolute(instance); });
    row.regret_s = best_of(repeats, [&] { (void)solve_robust_regret(instance); });
    row.fast_m_s = best_of(repeats, [&] { (void)all_M_fast(instance); });
    if (n <= naive_limit) row.naive_m_s = best_of(1, [&] { (void)all_M_naive(instance); });
    rows.push_back(row);
  }
  return rows;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t naive_limit,
              std::size_t repeats, const std::optional<std::filesystem::path>& output,
              std::ostream& out, std::ostream& err) {
  try {
    for (std::size_t n : sizes)
      if (n == 0) throw InvalidInput("sizes must be positive");
    std::ostringstream csv;
    csv << "n,absolute_s,regret_s,fast_m_s,naive_m_s\n";
    for (const BenchRow& row : run_bench(sizes, seed, naive_limit, repeats)) {
      csv << row.n << ',' << format_seconds(row.absolute_s) << ',' << format_seconds(row.regret_s) << ','
          << format_seconds(row.fast_m_s) << ','
          << (row.naive_m_s ? format_seconds(*row.naive_m_s) : std::string("NA")) << '\n';
    }
    if (output)
      io::write_file(*output, csv.str());
    else
      out << csv.str();
    return kOk;
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace robsched::cli
