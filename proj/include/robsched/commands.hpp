#pragma once

// Subcommand bodies for the robsched tool. Each returns the process exit
// status and writes diagnostics to the given streams.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "robsched/generate.hpp"
#include "robsched/io.hpp"
#include "robsched/verify.hpp"

namespace robsched::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kCounterexample = 2 };

/// Solution for an already-parsed instance.
io::SolutionFile solve(const Instance& instance, io::Criterion criterion);

int cmd_solve(io::Criterion criterion, const std::filesystem::path& input,
              const std::filesystem::path& output, std::ostream& err);

int cmd_generate(const GeneratorConfig& config, std::uint64_t seed,
                 const std::filesystem::path& output, std::ostream& err);

/// Checks the instance at `input` (when given), then `trials` random small
/// instances drawn from `seed`. Stops at the first counterexample.
int cmd_verify(const std::optional<std::filesystem::path>& input, std::size_t trials,
               std::uint64_t seed, const verify::Options& options, std::ostream& out,
               std::ostream& err);

struct BenchRow {
  std::size_t n = 0;
  double absolute_s = 0;
  double regret_s = 0;
  double fast_m_s = 0;
  std::optional<double> naive_m_s;  // skipped above the naive limit
};

/// Times the solvers on one generated instance per size; each figure is the
/// best of `repeats` runs.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                std::size_t naive_limit, std::size_t repeats);

/// Benchmark instance of size n: r_lo in [0, 5n], p in [1, 10], width in
/// [0, 50], U2 with gamma = 1.
GeneratorConfig bench_config(std::size_t n);

/// CSV: n,absolute_s,regret_s,fast_m_s,naive_m_s (naive is "NA" when skipped).
int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t naive_limit,
              std::size_t repeats, const std::optional<std::filesystem::path>& output,
              std::ostream& out, std::ostream& err);

}  // namespace robsched::cli
