#ifndef MCKP_BASELINES_HPP_
#define MCKP_BASELINES_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mckp/errors.hpp"
#include "mckp/model.hpp"
#include "mckp/numeric.hpp"

namespace mckp {

enum class ExactMethod { Brute, Dp };

struct ExactResult {
  double opt_profit = 0.0;
  ChoiceVector solution;
  ExactMethod method = ExactMethod::Brute;
};

namespace detail {

inline std::uint64_t choice_space_size(const Instance& inst) {
  std::uint64_t prod = 1;
  for (const auto& g : inst.groups()) prod = saturating_mul_u64(prod, g.size());
  return prod;
}

// Calls fn(profit, cost, linear_index) for every choice, in lexicographic
// order of the picks (group 0 most significant).
template <typename Fn>
void enumerate_choices(const Instance& inst, Fn&& fn) {
  const std::size_t k = inst.group_count();
  std::vector<std::size_t> picks(k, 0);
  std::vector<double> profit_prefix(k + 1, 0.0), cost_prefix(k + 1, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    profit_prefix[i + 1] = profit_prefix[i] + inst.group(i).items[0].profit;
    cost_prefix[i + 1] = cost_prefix[i] + inst.group(i).items[0].cost;
  }
  std::uint64_t index = 0;
  for (;;) {
    fn(profit_prefix[k], cost_prefix[k], index);
    ++index;
    std::size_t i = k;
    while (i-- > 0) {
      if (++picks[i] < inst.group(i).size()) {
        for (std::size_t j = i; j < k; ++j) {
          const Item& it = inst.group(j).items[picks[j]];
          profit_prefix[j + 1] = profit_prefix[j] + it.profit;
          cost_prefix[j + 1] = cost_prefix[j] + it.cost;
        }
        break;
      }
      picks[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
}

inline ChoiceVector decode_choice(const Instance& inst, std::uint64_t index) {
  const std::size_t k = inst.group_count();
  ChoiceVector x;
  x.picks.resize(k);
  for (std::size_t i = k; i-- > 0;) {
    std::uint64_t n = inst.group(i).size();
    x.picks[i] = static_cast<std::int32_t>(index % n);
    index /= n;
  }
  return x;
}

}  // namespace detail

// Exhaustive oracle: enumerates the full choice set and returns the
// maximum-profit feasible choice (lowest lexicographic picks on ties).
inline ExactResult brute_force(const Instance& inst, std::uint64_t product_cap = 10'000'000) {
  if (detail::choice_space_size(inst) > product_cap)
    throw Error(ErrorCode::TooLarge, "choice space exceeds the enumeration cap");
  const double b = inst.budget();
  bool found = false;
  double best = 0.0;
  std::uint64_t best_index = 0;
  detail::enumerate_choices(inst, [&](double profit, double cost, std::uint64_t index) {
    if (cost <= b && (!found || profit > best)) {
      found = true;
      best = profit;
      best_index = index;
    }
  });
  if (!found) throw Error(ErrorCode::InfeasibleInstance, "no choice fits the budget");
  return ExactResult{best, detail::decode_choice(inst, best_index), ExactMethod::Brute};
}

struct DpOptions {
  std::uint64_t memory_budget_bytes = 2ull * 1024 * 1024 * 1024;
};

namespace detail {

struct DpItem {
  std::int64_t cost;
  std::int64_t profit;
  std::int32_t index;
};

// Plain dominance filter (an item is useless if another one has >= profit
// and <= cost); unlike the convex-hull filter this is exact-safe. Output
// has strictly increasing cost and strictly increasing profit.
inline std::vector<DpItem> dominance_filter_i64(const Group& g) {
  std::vector<DpItem> items;
  items.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    items.push_back(DpItem{as_i64(g.items[j].cost), as_i64(g.items[j].profit),
                           static_cast<std::int32_t>(j)});
  std::sort(items.begin(), items.end(), [](const DpItem& a, const DpItem& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.profit != b.profit) return a.profit > b.profit;
    return a.index < b.index;
  });
  std::vector<DpItem> kept;
  for (const DpItem& it : items)
    if (kept.empty() || it.profit > kept.back().profit) kept.push_back(it);
  return kept;
}

// Rows run to tens of megabytes, so the row is updated tile by tile
// with every item applied to the hot tile before moving on; the first
// (cheapest) item initializes each tile in the same pass.
template <typename T>
void dp_apply_group(const std::vector<DpItem>& items, const std::vector<T>& prev,
                    std::vector<T>& cur, std::int64_t W, T sentinel) {
  constexpr std::int64_t kTile = 1 << 15;
  const T* src = prev.data();
  T* dst = cur.data();
  for (std::int64_t lo = 0; lo <= W; lo += kTile) {
    const std::int64_t hi = std::min(W, lo + kTile - 1);
    bool first = true;
    for (const DpItem& it : items) {
      if (it.cost > hi) break;  // sorted by cost: nothing further reaches this tile
      const T p = static_cast<T>(it.profit);
      const std::int64_t start = std::max(lo, it.cost);
      if (first) {
        for (std::int64_t w = lo; w < start; ++w) dst[w] = sentinel;
        for (std::int64_t w = start; w <= hi; ++w)
          dst[w] = static_cast<T>(src[w - it.cost] + p);
        first = false;
      } else {
        for (std::int64_t w = start; w <= hi; ++w)
          dst[w] = std::max(dst[w], static_cast<T>(src[w - it.cost] + p));
      }
    }
    if (first)
      for (std::int64_t w = lo; w <= hi; ++w) dst[w] = sentinel;
  }
}

template <typename T>
ExactResult dp_exact_impl(std::int64_t W, std::int64_t p_max,
                          const std::vector<std::vector<DpItem>>& groups,
                          std::uint64_t memory_budget_bytes) {
  const std::size_t k = groups.size();
  const std::size_t row_len = static_cast<std::size_t>(W) + 1;
  // Cells reachable only through an invalid state keep accumulating
  // profits, so the sentinel sits more than the total profit below zero:
  // invalid cells stay negative, valid ones never do.
  const T sentinel = static_cast<T>(-(p_max + 1));

  // Row checkpoints every `stride` groups keep memory near 2*sqrt(k) rows;
  // each block is recomputed once during backtracking.
  std::size_t stride = 1;
  while (stride * stride < k) ++stride;
  const std::size_t n_checkpoints = (k - 1) / stride;
  const std::uint64_t peak_rows = n_checkpoints + stride + 2;
  if (peak_rows * static_cast<std::uint64_t>(row_len) * sizeof(T) > memory_budget_bytes)
    throw Error(ErrorCode::MemoryBudgetExceeded,
                "DP table would exceed the configured memory budget");

  std::vector<std::vector<T>> checkpoints;
  checkpoints.reserve(n_checkpoints);
  std::vector<T> prev(row_len, 0), cur(row_len, 0);
  for (std::size_t i = 0; i < k; ++i) {
    dp_apply_group(groups[i], prev, cur, W, sentinel);
    std::swap(prev, cur);
    if ((i + 1) % stride == 0 && i + 1 < k) checkpoints.push_back(prev);
  }
  const T opt = prev[row_len - 1];

  // Backtrack block by block from the end; rows inside a block are
  // rebuilt from the checkpoint preceding it.
  ChoiceVector solution;
  solution.picks.resize(k);
  std::int64_t w = W;
  T target = opt;
  std::size_t block_end = k;  // exclusive
  std::vector<std::vector<T>> block_rows(stride, std::vector<T>(row_len));
  while (block_end > 0) {
    const std::size_t block_begin = (block_end - 1) / stride * stride;
    const std::vector<T>* base;
    std::vector<T> zeros;
    if (block_begin == 0) {
      zeros.assign(row_len, 0);
      base = &zeros;
    } else {
      base = &checkpoints[block_begin / stride - 1];
    }
    const std::vector<T>* running = base;
    for (std::size_t i = block_begin; i < block_end; ++i) {
      dp_apply_group(groups[i], *running, block_rows[i - block_begin], W, sentinel);
      running = &block_rows[i - block_begin];
    }
    for (std::size_t i = block_end; i-- > block_begin;) {
      const std::vector<T>& before =
          i == block_begin ? *base : block_rows[i - 1 - block_begin];
      bool matched = false;
      // Deterministic reconstruction: lowest original index wins.
      std::vector<DpItem> in_index_order = groups[i];
      std::sort(in_index_order.begin(), in_index_order.end(),
                [](const DpItem& a, const DpItem& b) { return a.index < b.index; });
      for (const DpItem& it : in_index_order) {
        if (it.cost > w) continue;
        T prior = before[static_cast<std::size_t>(w - it.cost)];
        if (prior >= 0 && static_cast<T>(prior + static_cast<T>(it.profit)) == target) {
          solution.picks[i] = it.index;
          w -= it.cost;
          target = prior;
          matched = true;
          break;
        }
      }
      if (!matched)
        throw Error(ErrorCode::InvalidSpec, "DP backtracking failed (internal)");
    }
    block_end = block_begin;
  }
  return ExactResult{static_cast<double>(opt), std::move(solution), ExactMethod::Dp};
}

}  // namespace detail

// Cost-indexed dynamic program over the groups: exact optimum for
// integral profits and costs. A half-integral budget is handled by
// flooring, which is equivalent when costs are integers. Memory stays
// within the configured budget via checkpointed rows.
inline ExactResult dp_exact(const Instance& inst, const DpOptions& options = {}) {
  if (!inst.integral_values())
    throw Error(ErrorCode::NonIntegralData, "DP requires integral profits and costs");
  double c_min = 0.0, c_max = 0.0, p_max = 0.0;
  for (const auto& g : inst.groups()) {
    double cmin = g.items[0].cost, cmax = g.items[0].cost, pmax = g.items[0].profit;
    for (const Item& it : g.items) {
      cmin = std::min(cmin, it.cost);
      cmax = std::max(cmax, it.cost);
      pmax = std::max(pmax, it.profit);
    }
    c_min += cmin;
    c_max += cmax;
    p_max += pmax;
  }
  if (c_min > inst.budget())
    throw Error(ErrorCode::InfeasibleInstance, "cheapest choice exceeds the budget");
  const std::int64_t W = detail::as_i64(std::floor(std::min(inst.budget(), c_max)));

  std::vector<std::vector<detail::DpItem>> groups;
  groups.reserve(inst.group_count());
  for (const auto& g : inst.groups()) groups.push_back(detail::dominance_filter_i64(g));

  const std::int64_t p_max_i = detail::as_i64(p_max);
  if (p_max < static_cast<double>(1 << 30))
    return detail::dp_exact_impl<std::int32_t>(W, p_max_i, groups,
                                               options.memory_budget_bytes);
  return detail::dp_exact_impl<std::int64_t>(W, p_max_i, groups,
                                             options.memory_budget_bytes);
}

// One group entry surviving the LP-dominance filter.
struct FilteredItem {
  std::int32_t index;
  double profit;
  double cost;
};

// Removes dominated items and items above no segment of the upper convex
// hull in (cost, profit). The survivors have strictly increasing cost,
// strictly increasing profit and strictly decreasing incremental
// efficiency, which is exactly what the greedy upgrade walk needs.
inline std::vector<FilteredItem> lp_dominance_filter(const Group& g) {
  std::vector<FilteredItem> items;
  items.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    items.push_back(FilteredItem{static_cast<std::int32_t>(j), g.items[j].profit,
                                 g.items[j].cost});
  std::sort(items.begin(), items.end(), [](const FilteredItem& a, const FilteredItem& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.profit != b.profit) return a.profit > b.profit;
    return a.index < b.index;
  });
  std::vector<FilteredItem> hull;
  for (const FilteredItem& it : items) {
    if (!hull.empty() && it.profit <= hull.back().profit) continue;  // dominated
    while (hull.size() >= 2) {
      const FilteredItem& a = hull[hull.size() - 2];
      const FilteredItem& b = hull[hull.size() - 1];
      // Pop b unless slope(b -> it) stays strictly below slope(a -> b).
      if ((it.profit - b.profit) * (b.cost - a.cost) >=
          (b.profit - a.profit) * (it.cost - b.cost))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(it);
  }
  return hull;
}

struct GreedyResult {
  double greedy_profit = 0.0;
  ChoiceVector greedy_solution;
  double lp_upper_bound = 0.0;
};

// LP-relaxation greedy: start from each group's cheapest efficient item
// and apply hull upgrades in order of decreasing incremental efficiency
// while they fit. The LP optimum -- greedy profit at the first upgrade
// that does not fit plus its proportional fraction -- is reported as the
// upper bound.
inline GreedyResult greedy(const Instance& inst) {
  const std::size_t k = inst.group_count();
  std::vector<std::vector<FilteredItem>> hulls;
  hulls.reserve(k);
  for (const auto& g : inst.groups()) hulls.push_back(lp_dominance_filter(g));

  GreedyResult res;
  res.greedy_solution.picks.resize(k);
  double cost = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    res.greedy_profit += hulls[i].front().profit;
    cost += hulls[i].front().cost;
    res.greedy_solution.picks[i] = hulls[i].front().index;
  }
  if (cost > inst.budget())
    throw Error(ErrorCode::InfeasibleInstance, "cheapest choice exceeds the budget");

  struct Upgrade {
    double dp, dc;
    std::size_t group;
    std::size_t step;  // hull position this upgrade moves from
  };
  std::vector<Upgrade> upgrades;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t + 1 < hulls[i].size(); ++t)
      upgrades.push_back(Upgrade{hulls[i][t + 1].profit - hulls[i][t].profit,
                                 hulls[i][t + 1].cost - hulls[i][t].cost, i, t});
  std::sort(upgrades.begin(), upgrades.end(), [](const Upgrade& a, const Upgrade& b) {
    const double lhs = a.dp * b.dc, rhs = b.dp * a.dc;
    if (lhs != rhs) return lhs > rhs;  // higher efficiency first
    if (a.dc != b.dc) return a.dc < b.dc;
    if (a.group != b.group) return a.group < b.group;
    return a.step < b.step;
  });

  std::vector<std::size_t> position(k, 0);
  double residual = inst.budget() - cost;
  std::optional<double> lp_ub;
  for (const Upgrade& up : upgrades) {
    if (position[up.group] != up.step) continue;  // predecessor was skipped
    if (up.dc <= residual) {
      position[up.group] = up.step + 1;
      res.greedy_profit += up.dp;
      res.greedy_solution.picks[up.group] = hulls[up.group][up.step + 1].index;
      residual -= up.dc;
    } else if (!lp_ub) {
      lp_ub = res.greedy_profit + residual / up.dc * up.dp;
    }
  }
  res.lp_upper_bound = lp_ub ? *lp_ub : res.greedy_profit;
  return res;
}

struct ParetoPoint {
  Outcome outcome;
  ChoiceVector witness;
};

// Brute-force nondominated filter over the full outcome set, sorted by
// decreasing f1. Duplicate outcomes keep the lexicographically smallest
// witness.
inline std::vector<ParetoPoint> pareto_front(const Instance& inst,
                                             std::uint64_t product_cap = 10'000'000) {
  if (detail::choice_space_size(inst) > product_cap)
    throw Error(ErrorCode::TooLarge, "choice space exceeds the enumeration cap");
  struct Entry {
    double f1, f2;
    std::uint64_t index;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(detail::choice_space_size(inst)));
  detail::enumerate_choices(inst, [&](double profit, double cost, std::uint64_t index) {
    entries.push_back(Entry{profit, -cost, index});
  });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.f1 != b.f1) return a.f1 > b.f1;
    if (a.f2 != b.f2) return a.f2 > b.f2;
    return a.index < b.index;
  });
  std::vector<ParetoPoint> front;
  double best_f2 = 0.0;
  for (const Entry& e : entries) {
    if (!front.empty() && e.f2 <= best_f2) continue;
    best_f2 = e.f2;
    front.push_back(ParetoPoint{Outcome{e.f1, e.f2}, detail::decode_choice(inst, e.index)});
  }
  return front;
}

}  // namespace mckp

#endif  // MCKP_BASELINES_HPP_
