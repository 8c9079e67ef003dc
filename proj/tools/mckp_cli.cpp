// Command-line front end: instance generation, solving and benchmarking.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mckp/mckp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_gen(const std::string& kind, int k, int n, int range, std::uint64_t seed, int count,
            const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    mckp::GenSpec spec;
    spec.kind = mckp::gen_kind_from_name(kind);
    spec.k = k;
    spec.n = n;
    spec.value_range = range;
    spec.seed = seed + static_cast<std::uint64_t>(i);
    mckp::Instance inst = mckp::generate(spec);
    fs::path path = fs::path(out_dir) / (kind + "_" + std::to_string(k) + "_" +
                                         std::to_string(n) + "_" +
                                         std::to_string(spec.seed) + ".mckp");
    mckp::write_instance_file(inst, path);
    std::cout << path.string() << " k=" << k << " n=" << n
              << " b=" << mckp::format_value(inst.budget()) << "\n";
  }
  return kExitOk;
}

int cmd_solve(const std::string& algo, const std::string& in_file, const std::string& format,
              std::uint64_t node_cap) {
  const bool json = format == "json";
  mckp::Instance inst = mckp::read_instance_file(in_file);
  const std::string id = std::filesystem::path(in_file).stem().string();
  auto start = std::chrono::steady_clock::now();

  if (algo == "bissa") {
    mckp::BissaOptions options;
    options.node_cap = node_cap;
    mckp::BissaReport report = mckp::run_bissa(inst, options);
    std::cout << mckp::write_report(report,
                                    json ? mckp::ReportFormat::Json : mckp::ReportFormat::Csv,
                                    id, std::nullopt, std::nullopt, ms_since(start));
    return report.status == mckp::BissaStatus::Infeasible ? kExitInfeasible : kExitOk;
  }

  try {
    if (algo == "greedy") {
      mckp::GreedyResult res = mckp::greedy(inst);
      if (json) {
        nlohmann::json j{{"algo", "greedy"},
                         {"profit", res.greedy_profit},
                         {"lp_upper_bound", res.lp_upper_bound},
                         {"picks", res.greedy_solution.picks},
                         {"timings_ms", {{"total", ms_since(start)}}}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << mckp::report_csv_header() << "\n"
                  << mckp::make_csv_row(id, std::nullopt, nullptr, res.lp_upper_bound).to_line()
                  << "\n";
      }
      return kExitOk;
    }
    mckp::ExactResult res = algo == "dp" ? mckp::dp_exact(inst) : mckp::brute_force(inst);
    if (json) {
      nlohmann::json j{{"algo", algo},
                       {"profit", res.opt_profit},
                       {"picks", res.solution.picks},
                       {"timings_ms", {{"total", ms_since(start)}}}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << mckp::report_csv_header() << "\n"
                << mckp::make_csv_row(id, res.opt_profit, nullptr, std::nullopt).to_line()
                << "\n";
    }
    return kExitOk;
  } catch (const mckp::Error& e) {
    if (e.code() == mckp::ErrorCode::InfeasibleInstance) {
      if (json) {
        nlohmann::json j{{"algo", algo}, {"status", "Infeasible"}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << mckp::report_csv_header() << "\n" << id << ",,infeasible,,,,,,,\n";
      }
      return kExitInfeasible;
    }
    throw;
  }
}

int cmd_bench(const std::string& set_dir, const std::string& algos_csv,
              const std::string& out_file, std::uint64_t node_cap) {
  mckp::BenchOptions options;
  options.node_cap = node_cap;
  std::string token;
  std::stringstream ss(algos_csv);
  while (std::getline(ss, token, ','))
    if (!token.empty()) options.algos.push_back(token);
  std::string table = mckp::run_bench(set_dir, options);
  if (out_file.empty()) {
    std::cout << table;
  } else {
    std::ofstream os(out_file, std::ios::binary);
    if (!os) throw mckp::Error(mckp::ErrorCode::ParseError, "cannot open " + out_file);
    os << table;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple-choice knapsack solver suite"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate random instances");
  std::string gen_kind;
  int gen_k = 1, gen_n = 1, gen_range = 10000, gen_count = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "instance class: unc or wco")
      ->required()
      ->check(CLI::IsMember({"unc", "wco"}));
  gen->add_option("--k", gen_k, "number of groups")->required();
  gen->add_option("--n", gen_n, "items per group")->required();
  gen->add_option("--R", gen_range, "value range upper bound")->capture_default_str();
  gen->add_option("--seed", gen_seed, "seed of the first instance")->required();
  gen->add_option("--count", gen_count, "number of instances")->capture_default_str();
  gen->add_option("--out", gen_out, "output directory")->required();

  auto* solve = app.add_subcommand("solve", "solve one instance file");
  std::string solve_algo, solve_in, solve_format = "json";
  std::uint64_t solve_cap = mckp::kDefaultNodeCap;
  solve->add_option("--algo", solve_algo, "bissa, greedy, dp or brute")
      ->required()
      ->check(CLI::IsMember({"bissa", "greedy", "dp", "brute"}));
  solve->add_option("--in", solve_in, "instance file")->required();
  solve->add_option("--format", solve_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  solve->add_option("--node-cap", solve_cap, "tie-scan node cap")
      ->envname("MCKP_NODE_CAP")
      ->capture_default_str();

  auto* bench = app.add_subcommand("bench", "run solvers over a directory of instances");
  std::string bench_set, bench_algos = "bissa", bench_out;
  std::uint64_t bench_cap = mckp::kDefaultNodeCap;
  bench->add_option("--set", bench_set, "directory of .mckp files")->required();
  bench->add_option("--algos", bench_algos, "comma-separated: dp,brute,bissa,greedy")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "output file (default stdout)");
  bench->add_option("--node-cap", bench_cap, "tie-scan node cap")
      ->envname("MCKP_NODE_CAP")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_k, gen_n, gen_range, gen_seed, gen_count, gen_out);
    if (solve->parsed()) return cmd_solve(solve_algo, solve_in, solve_format, solve_cap);
    if (bench->parsed()) return cmd_bench(bench_set, bench_algos, bench_out, bench_cap);
  } catch (const mckp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
