#pragma once

// JSON instance and solution files.
//
// Instance:
//   {"format": "robsched-instance", "version": 1,
//    "uncertainty": {"kind": "U1" | "U2", "gamma": <int>},
//    "jobs": [{"id": <int>, "p": <int>, "r_lo": <int>, "r_hi": <int>}, ...]}
//
// Solution:
//   {"format": "robsched-solution", "version": 1,
//    "criterion": "absolute" | "regret",
//    "objective": <int>,
//    "permutation": [<job id>, ...],
//    "worst_case": {"candidate_job": <job id>, "releases": [<int>, ...]},
//    "per_candidate": [<int>, ...]}          (regret only, indexed by id - 1)
//
// Writers emit one job or one array per line, plain decimal integers.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "robsched/core.hpp"

namespace robsched::io {

inline constexpr int kFormatVersion = 1;

/// Malformed document. what() starts with "line L, column C:" for syntax
/// errors and with the offending JSON path for schema errors.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Criterion { Absolute, Regret };

std::string to_string(Criterion criterion);
Criterion parse_criterion(std::string_view text);

struct SolutionFile {
  Criterion criterion = Criterion::Absolute;
  Time objective = 0;
  Schedule schedule;
  JobId worst_candidate = 1;
  Scenario worst_scenario;
  std::vector<Time> per_candidate;  // empty for absolute

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

/// Throws ParseError for syntax/schema problems and InvalidInput (naming the
/// job) when the data violates an instance invariant.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

SolutionFile parse_solution(std::string_view text);
std::string serialize_solution(const SolutionFile& solution);

/// Throws InvalidInput unless the permutation, re-evaluated on the embedded
/// scenario, reproduces the objective (makespan for absolute, makespan minus
/// the scenario optimum for regret).
void check_solution(const SolutionFile& solution, const Instance& instance);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace robsched::io
