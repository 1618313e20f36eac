#pragma once

// Cross-checks of the solvers against the brute-force oracle on one
// instance. Used by the `verify` subcommand and the acceptance suite.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "robsched/core.hpp"

namespace robsched::verify {

using AllMFunction = std::function<std::vector<Time>(const Instance&)>;

struct Options {
  /// Permutation-level checks (worst-case scenario, candidate set,
  /// optimality of both solvers) run only up to this many jobs.
  std::size_t full_check_limit = 6;
  /// ERD optimality against permutation enumeration up to this many jobs.
  std::size_t erd_check_limit = 8;
  /// The fast M(xi_j) implementation under test; swapped for mutation tests.
  AllMFunction fast_M;
};

struct Counterexample {
  std::string check;
  std::string detail;
  std::optional<Schedule> schedule;
  std::optional<Scenario> scenario;
};

/// First failing check, or nullopt when every applicable check passes.
/// U1 instances are normalized before checking.
std::optional<Counterexample> verify_instance(const Instance& instance, const Options& options = {});

/// Human-readable counterexample including the instance document.
std::string describe(const Counterexample& failure, const Instance& instance);

/// Deliberately wrong all_M_fast (every M(xi_j) above the all-early optimum
/// is one unit short). Negative control for the verifier.
std::vector<Time> corrupted_all_M(const Instance& instance);

/// Random small instance for oracle trials: n in [1, max_n], U1 or U2 with
/// a random budget (U2 gamma drawn from {1, 2, n}).
Instance random_oracle_instance(std::mt19937_64& rng, std::size_t max_n);

}  // namespace robsched::verify
