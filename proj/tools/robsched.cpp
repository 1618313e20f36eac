// robsched: robust single-machine makespan scheduling with interval release
// dates.
//
//   robsched solve --criterion regret -i instance.json -o solution.json
//   robsched generate --n 100 --seed 7 -o instance.json
//   robsched verify --trials 1000 --seed 1
//   robsched bench --sizes 1000 10000 100000

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robsched/commands.hpp"

namespace {

using namespace robsched;

bool parse_range(const std::vector<Time>& values, IntRange& range) {
  if (values.size() != 2) return false;
  range = {values[0], values[1]};
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust single-machine makespan scheduling with uncertain release dates"};
  app.require_subcommand(1);

  // solve
  std::string criterion = "regret";
  std::string solve_in, solve_out;
  auto* solve = app.add_subcommand("solve", "Solve an instance file under one criterion");
  solve->add_option("--criterion", criterion, "absolute or regret")
      ->check(CLI::IsMember({"absolute", "regret"}))
      ->required();
  solve->add_option("-i,--input", solve_in, "Instance file")->required();
  solve->add_option("-o,--output", solve_out, "Solution file")->required();

  // generate
  GeneratorConfig gen;
  std::uint64_t gen_seed = 0;
  std::vector<Time> r_range{0, 30}, p_range{1, 10}, w_range{0, 10};
  std::string model = "U2";
  Time gamma = 1;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a reproducible random instance");
  generate->add_option("--n", gen.n, "Number of jobs")->required();
  generate->add_option("--seed", gen_seed, "Random seed")->required();
  generate->add_option("--r-range", r_range, "Inclusive range for r_lo")->expected(2);
  generate->add_option("--p-range", p_range, "Inclusive range for p")->expected(2);
  generate->add_option("--width-range", w_range, "Inclusive range for r_hi - r_lo")->expected(2);
  generate->add_option("--model", model, "U1 or U2")->check(CLI::IsMember({"U1", "U2"}));
  generate->add_option("--gamma", gamma, "Budget");
  generate->add_option("-o,--output", gen_out, "Instance file")->required();

  // verify
  std::string verify_in;
  std::size_t trials = 100;
  std::uint64_t verify_seed = 1;
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "Check the solvers against brute-force oracles");
  verify->add_option("-i,--input", verify_in, "Instance file to check first");
  verify->add_option("--trials", trials, "Random instances to check");
  verify->add_option("--seed", verify_seed, "Random seed");
  verify->add_flag("--mutate-fast-m", mutate, "Check a deliberately broken fast M (negative control)");

  // bench
  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  std::uint64_t bench_seed = 1;
  std::size_t naive_limit = 100000;
  std::size_t repeats = 3;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time the solvers across instance sizes");
  bench->add_option("--sizes", sizes, "Instance sizes");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--naive-limit", naive_limit, "Largest n for the quadratic reference");
  bench->add_option("--repeats", repeats, "Best-of repetitions");
  bench->add_option("-o,--output", bench_out, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  if (solve->parsed())
    return cli::cmd_solve(io::parse_criterion(criterion), solve_in, solve_out, std::cerr);

  if (generate->parsed()) {
    if (!parse_range(r_range, gen.release) || !parse_range(p_range, gen.processing) ||
        !parse_range(w_range, gen.width)) {
      std::cerr << "generate: ranges take exactly two integers\n";
      return cli::kUsageError;
    }
    gen.model = {model == "U1" ? UncertaintyKind::U1 : UncertaintyKind::U2, gamma};
    return cli::cmd_generate(gen, gen_seed, gen_out, std::cerr);
  }

  if (verify->parsed()) {
    verify::Options options;
    if (mutate) options.fast_M = verify::corrupted_all_M;
    std::optional<std::filesystem::path> input;
    if (!verify_in.empty()) input = verify_in;
    return cli::cmd_verify(input, trials, verify_seed, options, std::cout, std::cerr);
  }

  std::optional<std::filesystem::path> output;
  if (!bench_out.empty()) output = bench_out;
  return cli::cmd_bench(sizes, bench_seed, naive_limit, repeats, output, std::cout, std::cerr);
}
