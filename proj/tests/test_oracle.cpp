#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "robsched/oracle.hpp"
#include "robsched/uncertainty.hpp"

using namespace robsched;
using namespace robsched::testing;

TEST_CASE("brute minimum makespan") {
  CHECK(oracle::brute_min_makespan(scen({4}), make_fixed({3}, {4})) == 7);
  CHECK(oracle::brute_min_makespan(scen({3, 1, 2}), make_fixed({2, 2, 2}, {3, 1, 2})) == 7);
  CHECK(oracle::brute_min_makespan(scen({0, 0, 0}), make_fixed({2, 9, 4}, {0, 0, 0})) == 15);
  const Instance eleven = make_fixed(std::vector<Time>(11, 1), std::vector<Time>(11, 0));
  CHECK_THROWS_AS(oracle::brute_min_makespan(extreme_scenarios(eleven).first, eleven), InvalidInput);
}

TEST_CASE("scenario grid for the cardinality budget") {
  const Instance two = make_instance({{1, 0, 3}, {1, 2, 5}}, {UncertaintyKind::U2, 1});
  const auto grid = oracle::enumerate_feasible_scenarios(two);
  CHECK(grid == std::vector<Scenario>{scen({0, 2}), scen({0, 5}), scen({3, 2})});

  const Instance four = make_instance({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}, {1, 0, 1}}, {UncertaintyKind::U2, 4});
  CHECK(oracle::enumerate_feasible_scenarios(four).size() == 16);

  const Instance eight = make_fixed(std::vector<Time>(8, 1), std::vector<Time>(8, 0));
  CHECK_THROWS_AS(oracle::enumerate_feasible_scenarios(eight), InvalidInput);
}

TEST_CASE("scenario grid for the continuous budget") {
  const Instance loose = make_instance({{1, 0, 3}, {1, 2, 5}, {1, 1, 1}}, {UncertaintyKind::U1, 100});
  const auto grid = oracle::enumerate_feasible_scenarios(loose);
  CHECK(std::find(grid.begin(), grid.end(), extreme_scenarios(loose).second) != grid.end());

  // Budget 4 over widths 3 and 3: raising either first saturates it.
  const Instance tight = make_instance({{1, 0, 3}, {1, 0, 3}}, {UncertaintyKind::U1, 4});
  const auto tg = oracle::enumerate_feasible_scenarios(tight);
  CHECK(tg == std::vector<Scenario>{scen({0, 0}), scen({0, 3}), scen({1, 3}), scen({3, 0}), scen({3, 1})});
}

TEST_CASE("property: every grid scenario is feasible and unique") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const UncertaintyModel model = trial % 2 ? UncertaintyModel{UncertaintyKind::U1, uniform_int(rng, 0, 20)}
                                             : UncertaintyModel{UncertaintyKind::U2, uniform_int(rng, 1, 4)};
    const Instance inst = random_small(rng, 7, model, 15);
    const auto grid = oracle::enumerate_feasible_scenarios(inst);
    REQUIRE(std::set<Scenario>(grid.begin(), grid.end()).size() == grid.size());
    for (const Scenario& s : grid) REQUIRE(is_feasible(s, inst));
    REQUIRE(std::find(grid.begin(), grid.end(), extreme_scenarios(inst).first) != grid.end());
  }
}

TEST_CASE("brute max regret") {
  const Instance inst = make_instance({{2, 0, 4}, {3, 0, 0}}, {UncertaintyKind::U2, 1});
  CHECK(oracle::brute_max_regret(sched({1, 2}), inst) == 3);
  CHECK(oracle::brute_max_regret(sched({2, 1}), inst) == 0);

  const Instance flat = make_fixed({2, 3, 1}, {5, 0, 1});
  CHECK(oracle::brute_max_regret(erd_schedule(scen({5, 0, 1}), flat), flat) == 0);
}
