#ifndef MCKP_BISSA_HPP_
#define MCKP_BISSA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mckp/errors.hpp"
#include "mckp/model.hpp"
#include "mckp/numeric.hpp"
#include "mckp/scalarize.hpp"
#include "mckp/tie_scan.hpp"

namespace mckp {

enum class BissaStatus { ExactSolved, Approximate, Infeasible };

enum class IterationBranch {
  AboveLineInfeasible,  // optimum above the current line, cost > budget
  AboveLineFeasible,    // optimum above the current line, cost < budget
  ExactHit,             // optimum lands exactly on the budget line
  Terminal,             // nothing above the line; tie scan decides
};

inline const char* branch_name(IterationBranch b) {
  switch (b) {
    case IterationBranch::AboveLineInfeasible: return "above-line-infeasible";
    case IterationBranch::AboveLineFeasible: return "above-line-feasible";
    case IterationBranch::ExactHit: return "exact-hit";
    case IterationBranch::Terminal: return "terminal";
  }
  return "unknown";
}

// One pass of the bisection loop. alpha and opt are reported in the
// normalized convex-combination scale (weights divided by wp + wc);
// the branch decisions themselves are taken on exact scaled integers
// whenever the data allows.
struct IterationRecord {
  ScalarWeights weights;
  double alpha = 0.0;
  double opt = 0.0;
  Outcome representative;
  IterationBranch branch = IterationBranch::Terminal;
};

struct BissaOptions {
  std::uint64_t node_cap = kDefaultNodeCap;
  int max_iterations = 0;  // 0: use the defensive default 10*(k + max n_i)
  double rel_tol = kDefaultRelTol;
};

struct BissaReport {
  BissaStatus status = BissaStatus::Infeasible;
  std::optional<ChoiceVector> solution;  // absent iff Infeasible
  double lb = 0.0;
  double ub = 0.0;
  double u = 0.0;
  // Vertices of the uncertainty triangle: the solution outcome,
  // (lb + u, -b) and (lb, -b). Any unfound better outcome lies inside.
  std::array<Outcome, 3> triangle{};
  std::vector<IterationRecord> iterations;
  int scalarized_count = 0;
  std::optional<TieScanResult> tie_scan;  // present when the terminal branch ran
  bool exact_path = false;       // integral data; knife-edge tests were exact
  bool overflow_fallback = false;  // exact path abandoned due to range guard
};

// Lower/upper bound from the terminal geometry: the upper bound is the
// f1-value of the terminal line at f2 = -budget.
//   u = (a1 - f1) * (f2 + budget) / (f2 - b1)
// Requires f2 > b1; f2 = b1 would make the line vertical.
inline std::array<double, 3> uncertainty_bounds(double a1, double b1, const Outcome& xhat,
                                                double budget) {
  if (xhat.f2 == b1)
    throw Error(ErrorCode::DegenerateGeometry, "solution outcome coincides with b1");
  double u = (a1 - xhat.f1) * (xhat.f2 + budget) / (xhat.f2 - b1);
  return {xhat.f1, u, xhat.f1 + u};
}

namespace detail {

inline Int128 scalar_value_i128(const Instance& inst, const ScalarWeights& w,
                                const ChoiceVector& x) {
  Int128 total = 0;
  for (std::size_t i = 0; i < x.picks.size(); ++i) {
    const Item& it = inst.group(i).items[static_cast<std::size_t>(x.picks[i])];
    total += (Int128)as_i64(w.wp) * as_i64(it.profit) -
             (Int128)as_i64(w.wc) * as_i64(it.cost);
  }
  return total;
}

}  // namespace detail

// Approximate solution search. Initializes with the two extreme Pareto
// outcomes, resolves trivial instances by direct comparison against the
// budget, then repeatedly solves the scalarized problem whose weights
// are the slope of the chord between the current outcome pair:
//   weights (wp, wc) = (b2 - b1, a1 - a2), alpha * (wp + wc) = wp*a1 + wc*b1.
// An optimum strictly above the chord replaces the endpoint on its side
// of the budget line; once nothing lies above, the feasible member of
// the optimal tie set with maximal cost becomes the answer and the
// chord yields the upper bound.
inline BissaReport run_bissa(const Instance& inst, const BissaOptions& options = {}) {
  const double b = inst.budget();
  const double tol = options.rel_tol;
  const bool exact_data = inst.integral_values();

  BissaReport report;
  report.exact_path = exact_data;

  // f2 == -b, resolved exactly for integral data. For real data the
  // tolerance applies, but only choices that are feasible under the
  // exact comparison may be declared exact hits.
  auto on_budget_line = [&](const Outcome& o) {
    if (exact_data) return o.f2 == -b;
    return approx_eq(o.f2, -b, tol) && -o.f2 <= b;
  };

  auto finish_exact = [&](const ChoiceVector& x, const Outcome& o) {
    report.status = BissaStatus::ExactSolved;
    report.solution = x;
    report.lb = report.ub = o.f1;
    report.u = 0.0;
    report.triangle = {o, Outcome{o.f1, -b}, Outcome{o.f1, -b}};
    report.scalarized_count = static_cast<int>(report.iterations.size());
    return report;
  };

  SubmaxProfile prof = submax_profile(inst);
  ChoiceVector x1, x2;
  Outcome o1, o2;
  if (prof.degenerate()) {
    // The ideal point is attained: the refined cost-min witness also
    // carries the maximal reachable profit. The checks below resolve
    // the instance without any scalarized subproblem.
    x1 = x2 = prof.f2_witness;
    o1 = o2 = evaluate(inst, x2);
  } else {
    std::tie(x1, o1) = solve_P1(inst, prof, tol);
    std::tie(x2, o2) = solve_P2(inst, prof, tol);
  }
  double a1 = o1.f1, b1 = o1.f2;
  double a2 = o2.f1, b2 = o2.f2;

  if (o1 == o2 && b2 >= -b) return finish_exact(x2, o2);
  if (b1 >= -b) return finish_exact(x1, o1);
  if (on_budget_line(o2)) return finish_exact(x2, o2);
  if (b2 < -b) {
    report.status = BissaStatus::Infeasible;
    return report;
  }

  // Invariant from here on: b1 < -b < b2 and a2 < a1.
  const int max_iterations =
      options.max_iterations > 0
          ? options.max_iterations
          : 10 * static_cast<int>(inst.group_count() + inst.max_group_size());

  for (int iter = 0; iter < max_iterations; ++iter) {
    ScalarWeights w{b2 - b1, a1 - a2};
    ScalarizedSolution sol = solve_scalarized(inst, w, tol);
    Outcome ox = evaluate(inst, sol.representative);
    const double denom = w.wp + w.wc;

    IterationRecord rec;
    rec.weights = w;
    rec.representative = ox;

    bool above;
    if (sol.exact_arithmetic) {
      detail::Int128 opt_scaled = detail::scalar_value_i128(inst, w, sol.representative);
      detail::Int128 alpha_scaled =
          (detail::Int128)detail::as_i64(w.wp) * detail::as_i64(a1) +
          (detail::Int128)detail::as_i64(w.wc) * detail::as_i64(b1);
      above = opt_scaled > alpha_scaled;
      rec.opt = static_cast<double>(opt_scaled) / denom;
      rec.alpha = static_cast<double>(alpha_scaled) / denom;
    } else {
      if (exact_data) report.overflow_fallback = true;
      double opt_scaled = sol.value;
      double alpha_scaled = w.wp * a1 + w.wc * b1;
      above = opt_scaled > alpha_scaled + comparison_tolerance(opt_scaled, alpha_scaled, tol);
      rec.opt = opt_scaled / denom;
      rec.alpha = alpha_scaled / denom;
    }

    if (above) {
      if (on_budget_line(ox)) {
        rec.branch = IterationBranch::ExactHit;
        report.iterations.push_back(rec);
        return finish_exact(sol.representative, ox);
      }
      if (ox.f2 > -b) {
        rec.branch = IterationBranch::AboveLineFeasible;
        a2 = ox.f1;
        b2 = ox.f2;
        x2 = sol.representative;
      } else {
        rec.branch = IterationBranch::AboveLineInfeasible;
        a1 = ox.f1;
        b1 = ox.f2;
        x1 = sol.representative;
      }
      report.iterations.push_back(rec);
      continue;
    }

    // Nothing above the line: scan the optimal set for the feasible
    // member of maximal cost. The current x2 lies in that set and is
    // feasible, so it seeds the scan.
    rec.branch = IterationBranch::Terminal;
    report.iterations.push_back(rec);
    std::vector<std::vector<std::int32_t>> ties;
    ties.reserve(sol.per_group.size());
    for (const auto& g : sol.per_group) ties.push_back(g.ties);
    TieScanResult scan = scan_ties(inst, ties, b, x2, options.node_cap);

    auto [lb, u, ub] = uncertainty_bounds(a1, b1, scan.best_outcome, b);
    report.status = BissaStatus::Approximate;
    report.solution = scan.best;
    report.lb = lb;
    report.u = u;
    report.ub = ub;
    report.triangle = {scan.best_outcome, Outcome{ub, -b}, Outcome{lb, -b}};
    report.scalarized_count = static_cast<int>(report.iterations.size());
    report.tie_scan = std::move(scan);
    return report;
  }
  throw Error(ErrorCode::IterationLimit,
              "bisection did not terminate within " + std::to_string(max_iterations) +
                  " iterations");
}

}  // namespace mckp

#endif  // MCKP_BISSA_HPP_
