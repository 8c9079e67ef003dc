#ifndef MCKP_SCALARIZE_HPP_
#define MCKP_SCALARIZE_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mckp/errors.hpp"
#include "mckp/model.hpp"
#include "mckp/numeric.hpp"

namespace mckp {

// Nonnegative weight pair, not both zero. The objective it induces is
//   maximize wp * profit(x) - wc * cost(x)  over the choice set.
// A convex-combination weight lambda in (0,1) corresponds to
// (wp, wc) = (lambda, 1 - lambda); any positive rescaling is equivalent.
struct ScalarWeights {
  double wp = 0.0;
  double wc = 0.0;
};

// Optimum of one group subproblem: the best single-item score, the
// lowest maximizing index, and the full (sorted) set of maximizers.
struct GroupScalarResult {
  double value = 0.0;
  std::int32_t best = 0;
  std::vector<std::int32_t> ties;
};

// Optimum of the full scalarized problem. Because the choice set is a
// Cartesian product, the optimum decomposes into independent per-group
// argmax picks and the solution set is the product of the tie sets.
struct ScalarizedSolution {
  double value = 0.0;
  ChoiceVector representative;
  std::vector<GroupScalarResult> per_group;
  std::uint64_t s_cardinality = 1;  // product of tie-set sizes, saturating
  bool exact_arithmetic = false;
};

namespace detail {

inline void check_weights(const ScalarWeights& w) {
  if (!(w.wp >= 0.0) || !(w.wc >= 0.0) || !(w.wp + w.wc > 0.0))
    throw Error(ErrorCode::InvalidSpec, "weights must be nonnegative and not both zero");
}

inline GroupScalarResult group_argmax_exact(const Group& g, std::int64_t wp,
                                            std::int64_t wc) {
  GroupScalarResult r;
  Int128 best = 0;
  for (std::size_t j = 0; j < g.items.size(); ++j) {
    const Item& it = g.items[j];
    Int128 s = (Int128)wp * as_i64(it.profit) - (Int128)wc * as_i64(it.cost);
    if (j == 0 || s > best) {
      best = s;
      r.ties.clear();
      r.ties.push_back(static_cast<std::int32_t>(j));
    } else if (s == best) {
      r.ties.push_back(static_cast<std::int32_t>(j));
    }
  }
  r.best = r.ties.front();
  r.value = static_cast<double>(best);
  return r;
}

inline GroupScalarResult group_argmax_float(const Group& g, double wp, double wc,
                                            double rel_tol) {
  GroupScalarResult r;
  double vmax = 0.0;
  std::vector<std::pair<std::int32_t, double>> cand;
  for (std::size_t j = 0; j < g.items.size(); ++j) {
    const Item& it = g.items[j];
    double s = wp * it.profit - wc * it.cost;
    if (j == 0 || s > vmax) vmax = s;
    // Keep anything that is currently within tolerance of the running
    // max; a score that falls out now can never re-qualify later.
    if (s + comparison_tolerance(s, vmax, rel_tol) >= vmax)
      cand.emplace_back(static_cast<std::int32_t>(j), s);
  }
  for (const auto& [j, s] : cand)
    if (approx_eq(s, vmax, rel_tol)) r.ties.push_back(j);
  r.best = r.ties.front();
  r.value = vmax;
  return r;
}

}  // namespace detail

// Solves one group subproblem in a single O(n_i) pass.
inline GroupScalarResult group_scalar_argmax(const Group& g, const ScalarWeights& w,
                                             double rel_tol = kDefaultRelTol) {
  detail::check_weights(w);
  bool exact = detail::is_exact_integer(w.wp) && detail::is_exact_integer(w.wc);
  if (exact)
    for (const Item& it : g.items)
      if (!detail::is_exact_integer(it.profit) || !detail::is_exact_integer(it.cost)) {
        exact = false;
        break;
      }
  if (exact)
    return detail::group_argmax_exact(g, detail::as_i64(w.wp), detail::as_i64(w.wc));
  return detail::group_argmax_float(g, w.wp, w.wc, rel_tol);
}

// Solves the scalarized problem over the whole instance in O(n) by
// combining the per-group argmax picks. The representative takes the
// lowest-index maximizer in every group.
inline ScalarizedSolution solve_scalarized(const Instance& inst, const ScalarWeights& w,
                                           double rel_tol = kDefaultRelTol) {
  detail::check_weights(w);
  ScalarizedSolution sol;
  sol.exact_arithmetic = detail::exact_weights_ok(inst, w.wp, w.wc);
  const std::size_t k = inst.group_count();
  sol.per_group.reserve(k);
  sol.representative.picks.reserve(k);
  detail::Int128 exact_total = 0;
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    GroupScalarResult r =
        sol.exact_arithmetic
            ? detail::group_argmax_exact(inst.group(i), detail::as_i64(w.wp),
                                         detail::as_i64(w.wc))
            : detail::group_argmax_float(inst.group(i), w.wp, w.wc, rel_tol);
    if (sol.exact_arithmetic) {
      const Item& it = inst.group(i).items[static_cast<std::size_t>(r.best)];
      exact_total += (detail::Int128)detail::as_i64(w.wp) * detail::as_i64(it.profit) -
                     (detail::Int128)detail::as_i64(w.wc) * detail::as_i64(it.cost);
    } else {
      total += r.value;
    }
    sol.s_cardinality = detail::saturating_mul_u64(sol.s_cardinality, r.ties.size());
    sol.representative.picks.push_back(r.best);
    sol.per_group.push_back(std::move(r));
  }
  sol.value = sol.exact_arithmetic ? static_cast<double>(exact_total) : total;
  return sol;
}

// Extremes of both objectives together with the "runner-up" structure
// needed to size the perturbed weight pairs:
//   f1_max      largest total profit, attained by f1_witness, which takes
//               the cheapest items among the per-group profit maximizers;
//   f2_at_f1max f2 of that witness;
//   f2_max      largest total (-cost), attained by f2_witness, which takes
//               the most profitable items among per-group cost minimizers;
//   f1_at_f2max f1 of that witness;
//   decr_p      smallest nonzero decrease of total profit from f1_max
//               (absent when every group has constant profits);
//   decr_negc   likewise for negated cost.
struct SubmaxProfile {
  double f1_max = 0.0;
  double f2_max = 0.0;
  double f1_at_f2max = 0.0;
  double f2_at_f1max = 0.0;
  std::optional<double> decr_p;
  std::optional<double> decr_negc;
  ChoiceVector f1_witness;
  ChoiceVector f2_witness;
  bool integral = false;

  double vbar1() const { return f1_max - *decr_p; }
  double vbar2() const { return f2_max - *decr_negc; }

  // True when the perturbed weight pairs are undefined and the caller
  // must fall back to the single dominant outcome (f1_at_f2max, f2_max).
  bool degenerate() const {
    return !decr_p.has_value() || !decr_negc.has_value() ||
           f2_max == f2_at_f1max || f1_max == f1_at_f2max;
  }
};

// One O(n) sweep collecting per-group maxima, strict runner-up values
// and the refined witnesses. No sorting is needed.
inline SubmaxProfile submax_profile(const Instance& inst) {
  SubmaxProfile prof;
  prof.integral = inst.integral_values();
  const std::size_t k = inst.group_count();
  prof.f1_witness.picks.resize(k);
  prof.f2_witness.picks.resize(k);
  double cost_at_f1 = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& items = inst.group(i).items;
    double pmax = items[0].profit;
    double cmin = items[0].cost;
    for (const Item& it : items) {
      pmax = std::max(pmax, it.profit);
      cmin = std::min(cmin, it.cost);
    }
    // Runner-up values strictly below/above the extremes, plus the
    // secondary refinement of each witness.
    std::optional<double> psub, csub;
    double cheapest_at_pmax = 0.0, best_p_at_cmin = 0.0;
    std::int32_t j1 = -1, j2 = -1;
    for (std::size_t j = 0; j < items.size(); ++j) {
      const Item& it = items[j];
      if (it.profit == pmax) {
        if (j1 < 0 || it.cost < cheapest_at_pmax) {
          cheapest_at_pmax = it.cost;
          j1 = static_cast<std::int32_t>(j);
        }
      } else if (!psub || it.profit > *psub) {
        psub = it.profit;
      }
      if (it.cost == cmin) {
        if (j2 < 0 || it.profit > best_p_at_cmin) {
          best_p_at_cmin = it.profit;
          j2 = static_cast<std::int32_t>(j);
        }
      } else if (!csub || it.cost < *csub) {
        csub = it.cost;
      }
    }
    prof.f1_max += pmax;
    prof.f2_max -= cmin;
    cost_at_f1 += cheapest_at_pmax;
    prof.f1_at_f2max += best_p_at_cmin;
    prof.f1_witness.picks[i] = j1;
    prof.f2_witness.picks[i] = j2;
    if (psub && (!prof.decr_p || pmax - *psub < *prof.decr_p)) prof.decr_p = pmax - *psub;
    if (csub && (!prof.decr_negc || *csub - cmin < *prof.decr_negc))
      prof.decr_negc = *csub - cmin;
  }
  prof.f2_at_f1max = -cost_at_f1;
  return prof;
}

// Perturbed weight pairs whose optima are Pareto efficient while still
// attaining the single-objective extremes. In the integer path the
// fractional perturbations are returned with denominators cleared so
// that downstream arithmetic stays integral.
inline std::pair<ScalarWeights, ScalarWeights> epsilon_weights(const SubmaxProfile& prof) {
  if (prof.degenerate())
    throw Error(ErrorCode::DegenerateObjective,
                "profit and cost extremes coincide; perturbation undefined");
  const double dp = *prof.decr_p;                            // f1_max - vbar1
  const double dc = *prof.decr_negc;                         // f2_max - vbar2
  const double span2 = prof.f2_max - prof.f2_at_f1max;       // > 0
  const double span1 = prof.f1_max - prof.f1_at_f2max;       // > 0
  if (prof.integral) {
    return {ScalarWeights{span2, dp}, ScalarWeights{dc, span1}};
  }
  return {ScalarWeights{1.0, dp / span2}, ScalarWeights{dc / span1, 1.0}};
}

namespace detail {

enum class TieRefine { MaxProfit, MinCost };

inline ChoiceVector refine_representative(const Instance& inst,
                                          const ScalarizedSolution& sol,
                                          TieRefine mode) {
  ChoiceVector out = sol.representative;
  for (std::size_t i = 0; i < sol.per_group.size(); ++i) {
    const auto& items = inst.group(i).items;
    std::int32_t pick = sol.per_group[i].ties.front();
    for (std::int32_t j : sol.per_group[i].ties) {
      const Item& a = items[static_cast<std::size_t>(j)];
      const Item& b = items[static_cast<std::size_t>(pick)];
      bool better = mode == TieRefine::MaxProfit
                        ? (a.profit > b.profit || (a.profit == b.profit && a.cost < b.cost))
                        : (a.cost < b.cost || (a.cost == b.cost && a.profit > b.profit));
      if (better) pick = j;  // ties iterate in index order, so first wins
    }
    out.picks[i] = pick;
  }
  return out;
}

}  // namespace detail

// Maximizes profit with a small negative weight on cost, so the result
// is Pareto efficient and still attains f1 = f1_max. Ties are resolved
// toward the profit-maximal corner of the optimal set.
inline std::pair<ChoiceVector, Outcome> solve_P1(const Instance& inst,
                                                 const SubmaxProfile& prof,
                                                 double rel_tol = kDefaultRelTol) {
  auto [w1, w2] = epsilon_weights(prof);
  (void)w2;
  ScalarizedSolution sol = solve_scalarized(inst, w1, rel_tol);
  ChoiceVector x = detail::refine_representative(inst, sol, detail::TieRefine::MaxProfit);
  return {x, evaluate(inst, x)};
}

// Symmetric to solve_P1: attains f2 = f2_max, ties resolved toward the
// cheapest corner of the optimal set.
inline std::pair<ChoiceVector, Outcome> solve_P2(const Instance& inst,
                                                 const SubmaxProfile& prof,
                                                 double rel_tol = kDefaultRelTol) {
  auto [w1, w2] = epsilon_weights(prof);
  (void)w1;
  ScalarizedSolution sol = solve_scalarized(inst, w2, rel_tol);
  ChoiceVector x = detail::refine_representative(inst, sol, detail::TieRefine::MinCost);
  return {x, evaluate(inst, x)};
}

}  // namespace mckp

#endif  // MCKP_SCALARIZE_HPP_
