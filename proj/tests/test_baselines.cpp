#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mckp/baselines.hpp"
#include "mckp/bissa.hpp"
#include "test_util.hpp"

using namespace mckp;
using mckp::testing::all_choices;
using mckp::testing::e1;
using mckp::testing::enum_opt_profit;
using mckp::testing::enum_pareto_outcomes;
using mckp::testing::random_small_instance;

TEST_CASE("brute force on the worked example") {
  Instance inst = e1();
  ExactResult r = brute_force(inst);
  CHECK(r.opt_profit == 13.0);
  CHECK(r.solution == ChoiceVector{{0, 1}});
  CHECK(r.method == ExactMethod::Brute);
  CHECK_THROWS_AS(brute_force(e1(2.0)), Error);
}

TEST_CASE("brute force on a single group picks the best fitting item") {
  Instance inst = validate_instance({Group{{{9, 8}, {5, 3}, {7, 4}}}}, 5.0);
  ExactResult r = brute_force(inst);
  CHECK(r.opt_profit == 7.0);
  CHECK(r.solution == ChoiceVector{{2}});
}

TEST_CASE("brute force refuses oversized products") {
  Instance inst = e1();
  CHECK_THROWS_AS(brute_force(inst, 3), Error);
}

TEST_CASE("cost-indexed DP matches the worked example") {
  ExactResult r = dp_exact(e1());
  CHECK(r.opt_profit == 13.0);
  CHECK(r.method == ExactMethod::Dp);
  CHECK(is_feasible(e1(), r.solution));
  CHECK(evaluate(e1(), r.solution).f1 == 13.0);
}

TEST_CASE("DP with a budget at c_max attains p_max") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    Instance base = random_small_instance(rng);
    GlobalBounds gb = global_bounds(base);
    Instance inst = validate_instance(base.groups(), gb.c_max);
    CHECK(dp_exact(inst).opt_profit == gb.p_max);
  }
}

TEST_CASE("DP rejects non-integral values and tiny memory budgets") {
  Instance real = validate_instance({Group{{{1.5, 1}}}}, 2.0);
  CHECK_THROWS_AS(dp_exact(real), Error);
  DpOptions tiny;
  tiny.memory_budget_bytes = 16;
  CHECK_THROWS_AS(dp_exact(e1(), tiny), Error);
  CHECK_THROWS_AS(dp_exact(e1(2.0)), Error);  // infeasible
}

TEST_CASE("DP equals brute force across the corpus") {
  Rng rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    Instance inst = random_small_instance(rng);
    auto opt = enum_opt_profit(inst);
    if (!opt) {
      CHECK_THROWS_AS(dp_exact(inst), Error);
      CHECK_THROWS_AS(brute_force(inst), Error);
      continue;
    }
    ExactResult dp = dp_exact(inst);
    ExactResult bf = brute_force(inst);
    CHECK(dp.opt_profit == bf.opt_profit);
    CHECK(bf.opt_profit == *opt);
    CHECK(is_feasible(inst, dp.solution));
    CHECK(evaluate(inst, dp.solution).f1 == dp.opt_profit);
  }
}

TEST_CASE("DP handles many groups through row checkpointing") {
  // Enough groups that the backtrack runs over several checkpoint blocks.
  Rng rng(59);
  std::vector<Group> groups;
  for (int i = 0; i < 137; ++i) {
    Group g;
    int n = static_cast<int>(rng.uniform(1, 4));
    for (int j = 0; j < n; ++j)
      g.items.push_back(Item{static_cast<double>(rng.uniform(1, 30)),
                             static_cast<double>(rng.uniform(1, 30))});
    groups.push_back(g);
  }
  Instance inst = validate_instance(groups, 137.0 * 12.0);
  ExactResult r = dp_exact(inst);
  CHECK(is_feasible(inst, r.solution));
  CHECK(evaluate(inst, r.solution).f1 == r.opt_profit);
  // Greedy brackets the DP optimum.
  GreedyResult g = greedy(inst);
  CHECK(g.greedy_profit <= r.opt_profit);
  CHECK(r.opt_profit <= g.lp_upper_bound);
}

TEST_CASE("LP dominance filter examples") {
  auto hull = lp_dominance_filter(Group{{{10, 4}, {7, 2}}});
  REQUIRE(hull.size() == 2);
  CHECK(hull[0].index == 1);  // (7,2) first: cheaper
  CHECK(hull[1].index == 0);
  CHECK((hull[1].profit - hull[0].profit) / (hull[1].cost - hull[0].cost) == 1.5);

  auto dominated = lp_dominance_filter(Group{{{5, 3}, {4, 3}}});
  REQUIRE(dominated.size() == 1);
  CHECK(dominated[0].index == 0);

  auto convex = lp_dominance_filter(Group{{{1, 1}, {2, 2}, {10, 3}}});
  REQUIRE(convex.size() == 2);
  CHECK(convex[0].index == 0);
  CHECK(convex[1].index == 2);  // (2,2) sits under the hull segment
}

TEST_CASE("LP dominance filter output is a proper hull walk") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = random_small_instance(rng, 1, 8);
    auto hull = lp_dominance_filter(inst.group(0));
    REQUIRE(!hull.empty());
    for (std::size_t t = 0; t + 1 < hull.size(); ++t) {
      CHECK(hull[t].cost < hull[t + 1].cost);
      CHECK(hull[t].profit < hull[t + 1].profit);
    }
    for (std::size_t t = 0; t + 2 < hull.size(); ++t) {
      double eff1 = (hull[t + 1].profit - hull[t].profit) / (hull[t + 1].cost - hull[t].cost);
      double eff2 =
          (hull[t + 2].profit - hull[t + 1].profit) / (hull[t + 2].cost - hull[t + 1].cost);
      CHECK(eff1 > eff2);
    }
    // The cheapest item and the best-profit item always survive.
    double cmin = inst.group(0).items[0].cost, pmax = inst.group(0).items[0].profit;
    for (const Item& it : inst.group(0).items) {
      cmin = std::min(cmin, it.cost);
      pmax = std::max(pmax, it.profit);
    }
    CHECK(hull.front().cost == cmin);
    CHECK(hull.back().profit == pmax);
  }
}

TEST_CASE("greedy walks the worked example exactly") {
  Instance inst = e1();
  GreedyResult r = greedy(inst);
  CHECK(r.greedy_profit == 13.0);
  CHECK(r.greedy_solution == ChoiceVector{{0, 1}});
  CHECK(r.lp_upper_bound == 13.75);
  CHECK_THROWS_AS(greedy(e1(2.0)), Error);
}

TEST_CASE("greedy with a budget at c_max takes every upgrade") {
  Rng rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    Instance base = random_small_instance(rng);
    GlobalBounds gb = global_bounds(base);
    Instance inst = validate_instance(base.groups(), gb.c_max);
    GreedyResult r = greedy(inst);
    CHECK(r.greedy_profit == gb.p_max);
    CHECK(r.lp_upper_bound == gb.p_max);
  }
}

TEST_CASE("oracle triangle: greedy <= exact <= LP bound") {
  Rng rng(71);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Instance inst = random_small_instance(rng);
    auto opt = enum_opt_profit(inst);
    if (!opt) continue;
    ++tested;
    GreedyResult g = greedy(inst);
    CHECK(is_feasible(inst, g.greedy_solution));
    CHECK(evaluate(inst, g.greedy_solution).f1 == g.greedy_profit);
    CHECK(g.greedy_profit <= *opt);
    CHECK(*opt <= g.lp_upper_bound);
    BissaReport r = run_bissa(inst);
    CHECK(g.lp_upper_bound >= r.lb);
  }
  CHECK(tested > 200);
}

TEST_CASE("pareto front of the worked example") {
  auto front = pareto_front(e1());
  REQUIRE(front.size() == 3);
  CHECK(front[0].outcome == Outcome{16, -9});
  CHECK(front[1].outcome == Outcome{13, -5});
  CHECK(front[2].outcome == Outcome{10, -3});
  CHECK(front[0].witness == ChoiceVector{{0, 0}});
  CHECK(front[1].witness == ChoiceVector{{0, 1}});
  CHECK(front[2].witness == ChoiceVector{{1, 1}});
}

TEST_CASE("pareto front of a single choice") {
  Instance inst = validate_instance({Group{{{5, 2}}}}, 2.0);
  auto front = pareto_front(inst);
  REQUIRE(front.size() == 1);
  CHECK(front[0].outcome == Outcome{5, -2});
}

TEST_CASE("pareto front matches the quadratic oracle") {
  Rng rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = random_small_instance(rng);
    auto front = pareto_front(inst);
    auto oracle = enum_pareto_outcomes(inst);
    CHECK(front.size() == oracle.size());
    for (const auto& p : front) {
      CHECK(evaluate(inst, p.witness) == p.outcome);
      bool found = false;
      for (const Outcome& o : oracle)
        if (o == p.outcome) found = true;
      CHECK(found);
    }
    // Decreasing f1, increasing f2: mutually nondominated by shape.
    for (std::size_t i = 0; i + 1 < front.size(); ++i) {
      CHECK(front[i].outcome.f1 > front[i + 1].outcome.f1);
      CHECK(front[i].outcome.f2 < front[i + 1].outcome.f2);
    }
  }
}

TEST_CASE("scalarized representatives land on the pareto front") {
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = random_small_instance(rng);
    auto front = pareto_front(inst);
    double wp = static_cast<double>(rng.uniform(1, 40));
    double wc = static_cast<double>(rng.uniform(1, 40));
    Outcome o = evaluate(inst, solve_scalarized(inst, {wp, wc}).representative);
    bool found = false;
    for (const auto& p : front)
      if (p.outcome == o) found = true;
    CHECK(found);
  }
}
