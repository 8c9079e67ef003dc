#ifndef MCKP_BENCH_HPP_
#define MCKP_BENCH_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mckp/baselines.hpp"
#include "mckp/bissa.hpp"
#include "mckp/errors.hpp"
#include "mckp/io.hpp"
#include "mckp/tie_scan.hpp"

namespace mckp {

struct BenchOptions {
  std::vector<std::string> algos;  // any of: dp, brute, bissa, greedy
  std::uint64_t node_cap = kDefaultNodeCap;
};

namespace detail {

inline std::string error_cell(const Error& e) {
  return std::string("error:") + error_code_name(e.code());
}

}  // namespace detail

// Runs the requested solvers over every .mckp file in a directory and
// assembles the ten-column table, ordered by filename. Per-instance
// failures land in the offending cell; the run continues. Two footer
// rows report the mean and max of the diff, relative-diff and iteration
// columns.
inline std::string run_bench(const std::filesystem::path& dir, const BenchOptions& options) {
  for (const std::string& a : options.algos)
    if (a != "dp" && a != "brute" && a != "bissa" && a != "greedy")
      throw Error(ErrorCode::InvalidSpec, "unknown algorithm '" + a + "'");
  auto wants = [&](const std::string& a) {
    return std::find(options.algos.begin(), options.algos.end(), a) != options.algos.end();
  };

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".mckp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  std::string out = report_csv_header() + "\n";
  std::vector<double> diffs, rels, iters;
  for (const auto& file : files) {
    const std::string id = file.stem().string();
    std::optional<Instance> inst;
    CsvRow row;
    try {
      inst = read_instance_file(file);
    } catch (const Error& e) {
      row.id = id;
      row.exact = detail::error_cell(e);
      out += row.to_line() + "\n";
      continue;
    }

    std::optional<double> exact;
    std::string exact_err;
    if (wants("dp")) {
      try {
        exact = dp_exact(*inst).opt_profit;
      } catch (const Error& e) {
        exact_err = detail::error_cell(e);
      }
    } else if (wants("brute")) {
      try {
        exact = brute_force(*inst).opt_profit;
      } catch (const Error& e) {
        exact_err = detail::error_cell(e);
      }
    }

    std::optional<BissaReport> report;
    std::string bissa_err;
    if (wants("bissa")) {
      try {
        BissaOptions bo;
        bo.node_cap = options.node_cap;
        report = run_bissa(*inst, bo);
      } catch (const Error& e) {
        bissa_err = detail::error_cell(e);
      }
    }

    std::optional<double> greedy_ub;
    std::string greedy_err;
    if (wants("greedy")) {
      try {
        greedy_ub = greedy(*inst).lp_upper_bound;
      } catch (const Error& e) {
        greedy_err = detail::error_cell(e);
      }
    }

    row = make_csv_row(id, exact, report ? &*report : nullptr, greedy_ub);
    if (!exact_err.empty()) row.exact = exact_err;
    if (!bissa_err.empty()) row.bissa = bissa_err;
    if (!greedy_err.empty()) row.greedy_ub = greedy_err;
    out += row.to_line() + "\n";

    if (exact && report && report->status != BissaStatus::Infeasible) {
      diffs.push_back(*exact - report->lb);
      if (*exact > 0) rels.push_back(100.0 * (*exact - report->lb) / *exact);
    }
    if (report && report->status != BissaStatus::Infeasible)
      iters.push_back(static_cast<double>(report->scalarized_count));
  }

  if (files.empty()) return out;

  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto maxv = [](const std::vector<double>& v) {
    double m = v.front();
    for (double x : v) m = std::max(m, x);
    return m;
  };
  CsvRow mean_row, max_row;
  mean_row.id = "mean";
  max_row.id = "max";
  if (!diffs.empty()) {
    mean_row.diff = format_fixed3(mean(diffs));
    max_row.diff = format_fixed3(maxv(diffs));
  }
  if (!rels.empty()) {
    mean_row.rel_diff_pct = format_fixed3(mean(rels));
    max_row.rel_diff_pct = format_fixed3(maxv(rels));
  }
  if (!iters.empty()) {
    mean_row.iters = format_fixed3(mean(iters));
    max_row.iters = format_value(maxv(iters));
  }
  out += mean_row.to_line() + "\n";
  out += max_row.to_line() + "\n";
  return out;
}

}  // namespace mckp

#endif  // MCKP_BENCH_HPP_
