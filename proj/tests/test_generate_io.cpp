#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "mckp/baselines.hpp"
#include "mckp/generate.hpp"
#include "mckp/io.hpp"
#include "test_util.hpp"

using namespace mckp;
using mckp::testing::e1;
using mckp::testing::random_small_instance;

namespace {

std::string to_bytes(const Instance& inst) {
  std::ostringstream os;
  write_instance(inst, os);
  return os.str();
}

}  // namespace

TEST_CASE("generation is deterministic per spec") {
  GenSpec spec{GenKind::Uncorrelated, 4, 7, 100, 12345, 10};
  CHECK(to_bytes(generate(spec)) == to_bytes(generate(spec)));
  GenSpec other = spec;
  other.seed = 12346;
  CHECK(to_bytes(generate(spec)) != to_bytes(generate(other)));
}

TEST_CASE("uncorrelated values stay in [1, R]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenSpec spec{GenKind::Uncorrelated, 2, 2, 10, seed, 10};
    Instance inst = generate(spec);
    for (const Group& g : inst.groups())
      for (const Item& it : g.items) {
        CHECK(it.profit >= 1.0);
        CHECK(it.profit <= 10.0);
        CHECK(it.cost >= 1.0);
        CHECK(it.cost <= 10.0);
      }
    CHECK(inst.budget() >= 0.0);
  }
}

TEST_CASE("weakly correlated profits track the cost") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenSpec spec{GenKind::WeaklyCorrelated, 1, 1, 10000, seed, 10};
    Instance inst = generate(spec);
    const Item& it = inst.group(0).items[0];
    CHECK(it.profit >= std::max(1.0, it.cost - 10.0));
    CHECK(it.profit <= it.cost + 10.0);
  }
}

TEST_CASE("gen spec validation") {
  CHECK_THROWS_AS(generate(GenSpec{GenKind::Uncorrelated, 0, 1, 10, 1, 10}), Error);
  CHECK_THROWS_AS(generate(GenSpec{GenKind::WeaklyCorrelated, 1, 1, 5, 1, 10}), Error);
  CHECK_THROWS_AS(gen_kind_from_name("bogus"), Error);
}

TEST_CASE("budget rule on a single two-cost group") {
  // costs {2, 10}: center 6, radius floor(6/4) = 1, so b in {5, 6, 7}.
  std::vector<Group> groups{Group{{{1, 2}, {1, 10}}}};
  std::set<double> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    seen.insert(compute_budget(groups, rng));
  }
  CHECK(seen == std::set<double>{5.0, 6.0, 7.0});
}

TEST_CASE("constant-cost groups give a symmetric budget range") {
  std::vector<Group> groups{Group{{{1, 8}}}, Group{{{1, 8}}}, Group{{{1, 8}}}};
  // center c = 24, radius floor(24/4) = 6
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    double b = compute_budget(groups, rng);
    CHECK(b >= 18.0);
    CHECK(b <= 30.0);
    CHECK(b == std::floor(b));
  }
}

TEST_CASE("budget always lands within a quarter of the center") {
  Rng rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = random_small_instance(rng);
    GlobalBounds gb = global_bounds(inst);
    double c = (gb.c_min + gb.c_max) / 2.0;
    CHECK(inst.budget() >= c - std::floor(c / 4.0));
    CHECK(inst.budget() <= c + std::floor(c / 4.0));
    CHECK(inst.budget() >= 0.0);
  }
}

TEST_CASE("odd cost sums carry an exact half and flag the instance real") {
  std::vector<Group> groups{Group{{{1, 1}, {1, 2}}}};  // min+max = 3, c = 1.5
  Rng rng(5);
  double b = compute_budget(groups, rng);
  CHECK(b == std::floor(b) + 0.5);
  Instance inst = validate_instance(groups, b);
  CHECK(inst.value_class() == ValueClass::Real);
  CHECK(inst.integral_values());
}

TEST_CASE("uncorrelated sample means sit near the range midpoint") {
  GenSpec spec{GenKind::Uncorrelated, 10, 1000, 10000, 77, 10};
  Instance inst = generate(spec);
  double psum = 0.0, csum = 0.0;
  for (const Group& g : inst.groups())
    for (const Item& it : g.items) {
      psum += it.profit;
      csum += it.cost;
    }
  double n = static_cast<double>(inst.total_items());
  double mid = (10000.0 + 1.0) / 2.0;
  CHECK(std::fabs(psum / n - mid) / mid < 0.05);
  CHECK(std::fabs(csum / n - mid) / mid < 0.05);
}

TEST_CASE("regenerated large uncorrelated instances solve near 10R") {
  GenSpec spec{GenKind::Uncorrelated, 10, 1000, 10000, 1, 10};
  Instance inst = generate(spec);
  ExactResult r = dp_exact(inst);
  CHECK(r.opt_profit > 99000.0);
  CHECK(r.opt_profit <= 100000.0);
}

TEST_CASE("worked example serializes to the documented bytes") {
  CHECK(to_bytes(e1()) == "MCKP 1\n2 6\n2\n10 4\n7 2\n2\n6 5\n3 1\n");
}

TEST_CASE("read inverts write") {
  Rng rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = random_small_instance(rng);
    std::string bytes = to_bytes(inst);
    std::istringstream is(bytes);
    Instance back = read_instance(is);
    CHECK(back.group_count() == inst.group_count());
    CHECK(back.budget() == inst.budget());
    CHECK(back.value_class() == inst.value_class());
    for (std::size_t i = 0; i < inst.group_count(); ++i) {
      REQUIRE(back.group(i).size() == inst.group(i).size());
      for (std::size_t j = 0; j < inst.group(i).size(); ++j) {
        CHECK(back.group(i).items[j].profit == inst.group(i).items[j].profit);
        CHECK(back.group(i).items[j].cost == inst.group(i).items[j].cost);
      }
    }
    CHECK(to_bytes(back) == bytes);
  }
}

TEST_CASE("fractional values round-trip exactly") {
  Instance inst = validate_instance(
      {Group{{{0.1, 0.2}, {7.25, 1e-3}}}, Group{{{123456.789, 0.5}}}}, 1.0 / 3.0);
  std::istringstream is(to_bytes(inst));
  Instance back = read_instance(is);
  CHECK(back.budget() == inst.budget());
  CHECK(back.group(0).items[0].profit == 0.1);
  CHECK(back.group(1).items[0].profit == 123456.789);
}

TEST_CASE("parser reports the offending line") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_instance(is);
  };
  try {
    parse("MCKP 1\n2 6\nnot-a-count\n10 4\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.line() == 3);
  }
  try {
    parse("MCKP 2\n1 1\n1\n1 1\n");
    FAIL("expected VersionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VersionMismatch);
  }
  CHECK_THROWS_AS(parse("bogus\n"), Error);
  CHECK_THROWS_AS(parse("MCKP 1\n1 1\n1\n1 1\nextra\n"), Error);
  CHECK_THROWS_AS(parse("MCKP 1\n2 6\n1\n1 1\n"), Error);  // missing second group
  // Negative values parse but fail validation with their own code.
  try {
    parse("MCKP 1\n1 1\n1\n-1 1\n");
    FAIL("expected NegativeValue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeValue);
  }
}

TEST_CASE("JSON report carries the full schema") {
  BissaReport r = run_bissa(e1());
  nlohmann::json j = report_to_json(r, 1.25);
  CHECK(j["status"] == "Approximate");
  CHECK(j["lb"] == 13.0);
  CHECK(j["ub"] == 13.75);
  CHECK(j["u"] == 0.75);
  CHECK(j["picks"] == nlohmann::json::array({0, 1}));
  CHECK(j["triangle"][0] == nlohmann::json::array({13.0, -5.0}));
  CHECK(j["triangle"][1] == nlohmann::json::array({13.75, -6.0}));
  CHECK(j["iterations"].size() == 2);
  CHECK(j["iterations"][0]["branch"] == "above-line-feasible");
  CHECK(j["iterations"][1]["branch"] == "terminal");
  CHECK(j["scalarized_count"] == 2);
  CHECK(j["s_cardinality"] == 2);
  CHECK(j["exhaustive"] == true);
  CHECK(j["timings_ms"]["total"] == 1.25);
}

TEST_CASE("JSON report for infeasible runs uses nulls") {
  nlohmann::json j = report_to_json(run_bissa(e1(2.0)), 0.0);
  CHECK(j["status"] == "Infeasible");
  CHECK(j["lb"].is_null());
  CHECK(j["picks"].is_null());
  CHECK(j["s_cardinality"].is_null());
  CHECK(j["scalarized_count"] == 0);
}

TEST_CASE("CSV header and worked-example row") {
  CHECK(report_csv_header() == "id,exact,bissa,diff,rel_diff_pct,ub,ub_gap,ub_rel_gap_pct,greedy_ub,iters");
  BissaReport r = run_bissa(e1());
  CsvRow row = make_csv_row("e1", 13.0, &r, 13.75);
  CHECK(row.to_line() == "e1,13,13,0,0.000,13.750,0.750,5.769,13.750,2");
}

TEST_CASE("CSV row formats match the published table style") {
  // A report shaped like a large uncorrelated run: profit 99849 with
  // uncertainty 38.011 against an exact optimum of 99873.
  BissaReport r;
  r.status = BissaStatus::Approximate;
  r.solution = ChoiceVector{{0}};
  r.lb = 99849.0;
  r.u = 38.011;
  r.ub = 99849.0 + 38.011;
  r.scalarized_count = 7;
  CsvRow row = make_csv_row("t1-1", 99873.0, &r, 99887.0);
  CHECK(row.to_line() == "t1-1,99873,99849,24,0.024,99887.011,38.011,0.038,99887.000,7");

  // Exact finishes print a zero-width uncertainty: ub equals the profit.
  BissaReport ex;
  ex.status = BissaStatus::ExactSolved;
  ex.solution = ChoiceVector{{0}};
  ex.lb = ex.ub = 86132.0;
  ex.u = 0.0;
  ex.scalarized_count = 6;
  CsvRow exact_row = make_csv_row("t4-9", 86132.0, &ex, 86132.0);
  CHECK(exact_row.to_line() == "t4-9,86132,86132,0,0.000,86132.000,0.000,0.000,86132.000,6");
}

TEST_CASE("infeasible rows are marked rather than numeric") {
  BissaReport r = run_bissa(e1(2.0));
  CsvRow row = make_csv_row("tight", std::nullopt, &r, std::nullopt);
  CHECK(row.to_line() == "tight,,infeasible,,,,,,,");
}
