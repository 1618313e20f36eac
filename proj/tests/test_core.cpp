#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "robsched/core.hpp"
#include "robsched/oracle.hpp"
#include "robsched/uncertainty.hpp"

using namespace robsched;
using namespace robsched::testing;

TEST_CASE("instance validation names the offending job") {
  CHECK_THROWS_WITH_AS(make_instance({{0, 1, 2}}), doctest::Contains("job 1"), InvalidInput);
  CHECK_THROWS_WITH_AS(make_instance({{1, 0, 0}, {2, 5, 4}}), doctest::Contains("job 2"), InvalidInput);
  CHECK_THROWS_AS(make_instance({{1, -1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Instance({}, {}), InvalidInput);
  CHECK_THROWS_WITH_AS(Instance({Job{1, 1, 0, 0}, Job{1, 1, 0, 0}}, {}), doctest::Contains("duplicate"),
                       InvalidInput);
  CHECK_THROWS_AS(Instance({Job{1, 1, 0, 0}, Job{3, 1, 0, 0}}, {}), InvalidInput);
  CHECK_THROWS_AS(make_instance({{1, 0, 0}}, {UncertaintyKind::U2, 0}), InvalidInput);
  CHECK_NOTHROW(make_instance({{1, 0, 0}}, {UncertaintyKind::U1, 0}));
}

TEST_CASE("instance rejects sums that overflow") {
  const Time big = std::numeric_limits<Time>::max() / 2;
  CHECK_NOTHROW(make_instance({{big, 0, 0}, {big, 0, 0}}));
  CHECK_THROWS_WITH_AS(make_instance({{big, 0, 0}, {big, 0, 0}, {big, 0, 0}}),
                       doctest::Contains("overflow"), InvalidInput);
  CHECK_THROWS_AS(make_instance({{2, 0, std::numeric_limits<Time>::max() - 1}}), InvalidInput);
}

TEST_CASE("instance accepts jobs in any id order") {
  const Instance inst(std::vector<Job>{{2, 5, 0, 0}, {1, 3, 1, 1}}, {});
  CHECK(inst.job(1).p == 3);
  CHECK(inst.job(2).p == 5);
}

TEST_CASE("evaluate follows the completion recursion") {
  SUBCASE("single job") {
    const Instance inst = make_fixed({3}, {5});
    const auto eval = evaluate(sched({1}), scen({5}), inst);
    CHECK(eval.makespan == 8);
    CHECK(eval.critical_position == 1);
  }
  SUBCASE("three jobs") {
    const Instance inst = make_fixed({2, 2, 2}, {3, 1, 2});
    const auto eval = evaluate(sched({2, 3, 1}), scen({3, 1, 2}), inst);
    CHECK(eval.completions == std::vector<Time>{3, 5, 7});
    CHECK(eval.makespan == 7);
    CHECK(eval.critical_position == 1);
    CHECK(oracle::brute_min_makespan(scen({3, 1, 2}), inst) == 7);
  }
  SUBCASE("all releases zero gives the total processing time") {
    const Instance inst = make_fixed({4, 1, 7, 2}, {0, 0, 0, 0});
    for (const auto& order : {std::vector<JobId>{1, 2, 3, 4}, {4, 2, 1, 3}, {3, 1, 4, 2}}) {
      const auto eval = evaluate(sched(order), scen({0, 0, 0, 0}), inst);
      CHECK(eval.makespan == 14);
      CHECK(eval.critical_position == 1);
    }
  }
}

TEST_CASE("evaluate rejects mismatched inputs") {
  const Instance inst = make_instance({{1, 0, 5}, {2, 0, 5}});
  CHECK_THROWS_AS(evaluate(sched({1}), scen({0, 0}), inst), InvalidInput);
  CHECK_THROWS_AS(evaluate(sched({1, 1}), scen({0, 0}), inst), InvalidInput);
  CHECK_THROWS_AS(evaluate(sched({1, 3}), scen({0, 0}), inst), InvalidInput);
  CHECK_THROWS_AS(evaluate(sched({1, 2}), scen({0}), inst), InvalidInput);
  CHECK_THROWS_AS(evaluate(sched({1, 2}), scen({0, 6}), inst), InvalidInput);
}

TEST_CASE("critical job is the last one started at its release") {
  // releases 0, 10, 11; p = 5, 2, 1 -> C = 5, 12, 13. Position 2 starts at
  // its release; position 3 does not.
  const Instance inst = make_fixed({5, 2, 1}, {0, 10, 11});
  const auto eval = evaluate(sched({1, 2, 3}), scen({0, 10, 11}), inst);
  CHECK(eval.critical_position == 2);
  CHECK(find_critical_job(eval, sched({1, 2, 3}), scen({0, 10, 11}), inst) == 2);
}

TEST_CASE("erd schedule sorts by release with id tie-break") {
  CHECK(erd_schedule(scen({3, 1, 2}), make_fixed({2, 2, 2}, {3, 1, 2})) == sched({2, 3, 1}));
  CHECK(erd_schedule(scen({1, 1}), make_fixed({5, 2}, {1, 1})) == sched({1, 2}));
  CHECK(optimal_makespan(scen({3, 1, 2}), make_fixed({2, 2, 2}, {3, 1, 2})) == 7);
  CHECK(optimal_makespan(scen({6, 1, 5}), make_fixed({3, 1, 2}, {6, 1, 5})) == 10);
  CHECK(optimal_makespan(scen({0, 0, 0}), make_fixed({3, 1, 2}, {0, 0, 0})) == 6);
}

TEST_CASE("property: erd is optimal against permutation enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = random_small(rng, 8, {UncertaintyKind::U2, 1}, 20);
    const Scenario s = random_scenario(inst, rng);
    REQUIRE(optimal_makespan(s, inst) == oracle::brute_min_makespan(s, inst));
  }
}

TEST_CASE("property: critical position satisfies the critical-job equation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = random_small(rng, 12, {UncertaintyKind::U2, 1}, 20);
    const Schedule pi = random_schedule(inst.size(), rng);
    const Scenario s = random_scenario(inst, rng);
    const auto eval = evaluate(pi, s, inst);
    const std::size_t i = eval.critical_position;
    Time tail = 0;
    for (std::size_t k = i; k <= inst.size(); ++k) tail += inst.job(pi.order[k - 1]).p;
    REQUIRE(s.release(pi.order[i - 1]) + tail == eval.makespan);
    // No later position starts at its own release.
    for (std::size_t k = i + 1; k <= inst.size(); ++k) {
      const JobId id = pi.order[k - 1];
      REQUIRE(eval.completions[k - 1] != s.release(id) + inst.job(id).p);
    }
    for (std::size_t k = 1; k < eval.completions.size(); ++k)
      REQUIRE(eval.completions[k] > eval.completions[k - 1]);
  }
}

TEST_CASE("property: makespan is monotone in releases") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = random_small(rng, 10, {UncertaintyKind::U2, 1}, 20);
    const Schedule pi = random_schedule(inst.size(), rng);
    Scenario a = random_scenario(inst, rng);
    Scenario b = a;
    for (std::size_t j = 0; j < b.releases.size(); ++j)
      b.releases[j] = uniform_int(rng, a.releases[j], inst.jobs()[j].r_hi);
    REQUIRE(makespan(pi, a, inst) <= makespan(pi, b, inst));
  }
}

TEST_CASE("property: raising one release by eps") {
  std::mt19937_64 rng(14);
  int equality_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    // Wide intervals leave room to raise.
    GeneratorConfig config{static_cast<std::size_t>(uniform_int(rng, 1, 8)), {0, 30}, {1, 10}, {0, 40}, {}};
    const Instance inst = generate_instance(config, rng);
    const Schedule pi = random_schedule(inst.size(), rng);
    const Scenario s = random_scenario(inst, rng);
    const JobId j = static_cast<JobId>(uniform_int(rng, 1, static_cast<Time>(inst.size())));
    const Time eps = uniform_int(rng, 0, inst.job(j).r_hi - s.release(j));
    Scenario raised = s;
    raised.releases[j - 1] += eps;

    const auto before = evaluate(pi, s, inst);
    const Time after = makespan(pi, raised, inst);
    REQUIRE(after <= before.makespan + eps);
    if (pi.order[before.critical_position - 1] == j) {
      REQUIRE(after == before.makespan + eps);
      ++equality_cases;
    }
    REQUIRE(optimal_makespan(raised, inst) <= optimal_makespan(s, inst) + eps);
  }
  CHECK(equality_cases > 50);
}

TEST_CASE("hypothetical all-late scenario is evaluable") {
  const Instance inst = make_instance({{1, 1, 10}, {5, 2, 3}});
  const auto [lo, hi] = extreme_scenarios(inst);
  CHECK_FALSE(is_feasible(hi, make_instance({{1, 1, 10}, {5, 2, 3}}, {UncertaintyKind::U2, 1})));
  CHECK(makespan(sched({2, 1}), hi, inst) == 11);
}
