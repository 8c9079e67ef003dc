#ifndef MCKP_TIE_SCAN_HPP_
#define MCKP_TIE_SCAN_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mckp/errors.hpp"
#include "mckp/model.hpp"
#include "mckp/numeric.hpp"

namespace mckp {

// Default cap on visited search nodes; large enough to cover tie-set
// cardinalities around 2e8 while keeping adversarial scans bounded.
inline constexpr std::uint64_t kDefaultNodeCap = 200'000'000;

struct TieScanResult {
  ChoiceVector best;
  Outcome best_outcome;
  bool exhaustive = true;       // false when the node cap interrupted the scan
  std::uint64_t nodes_visited = 0;
  std::uint64_t s_cardinality = 1;  // product of raw tie-set sizes, saturating
};

namespace detail {

struct TieEntry {
  double cost;
  std::int32_t item;
};

class TieScanner {
 public:
  TieScanner(const Instance& inst, const std::vector<std::vector<std::int32_t>>& ties,
             double budget, const ChoiceVector& fallback, std::uint64_t node_cap)
      : inst_(inst), budget_(budget), cap_(node_cap) {
    const std::size_t k = inst.group_count();
    // One entry per distinct cost: members of a tie set with equal cost
    // have equal profit as well, so the lowest index represents them.
    lists_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& items = inst.group(i).items;
      auto& list = lists_[i];
      for (std::int32_t j : ties[i])
        list.push_back(TieEntry{items[static_cast<std::size_t>(j)].cost, j});
      std::sort(list.begin(), list.end(), [](const TieEntry& a, const TieEntry& b) {
        return a.cost != b.cost ? a.cost > b.cost : a.item < b.item;
      });
      list.erase(std::unique(list.begin(), list.end(),
                             [](const TieEntry& a, const TieEntry& b) {
                               return a.cost == b.cost;
                             }),
                 list.end());
    }
    // Visit high-branching groups first; deeper levels then prune on
    // tighter cost bounds.
    order_.resize(k);
    for (std::size_t i = 0; i < k; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return lists_[a].size() != lists_[b].size() ? lists_[a].size() > lists_[b].size()
                                                  : a < b;
    });
    suffix_min_.assign(k + 1, 0.0);
    suffix_max_.assign(k + 1, 0.0);
    for (std::size_t d = k; d-- > 0;) {
      const auto& list = lists_[order_[d]];
      suffix_min_[d] = suffix_min_[d + 1] + list.back().cost;
      suffix_max_[d] = suffix_max_[d + 1] + list.front().cost;
    }
    current_.picks.resize(k);
    best_ = fallback;
    best_cost_ = -evaluate(inst, fallback).f2;
    if (best_cost_ == budget_) stop_ = true;
  }

  TieScanResult run() {
    if (!stop_) dfs(0, 0.0);
    TieScanResult r;
    r.best = best_;
    r.best_outcome = evaluate(inst_, best_);
    r.exhaustive = !truncated_;
    r.nodes_visited = nodes_;
    return r;
  }

 private:
  void dfs(std::size_t depth, double acc) {
    ++nodes_;
    if (depth == order_.size()) {
      if (acc > best_cost_) {
        best_cost_ = acc;
        best_ = current_;
        if (best_cost_ == budget_) stop_ = true;
      }
      return;
    }
    const std::size_t g = order_[depth];
    for (const TieEntry& e : lists_[g]) {
      double cost = acc + e.cost;
      if (cost + suffix_min_[depth + 1] > budget_) continue;  // cannot stay feasible
      if (cost + suffix_max_[depth + 1] <= best_cost_) break;  // cannot improve
      if (nodes_ >= cap_) {
        truncated_ = true;
        return;
      }
      current_.picks[g] = e.item;
      dfs(depth + 1, cost);
      if (stop_ || truncated_) return;
    }
  }

  const Instance& inst_;
  double budget_;
  std::uint64_t cap_;
  std::vector<std::vector<TieEntry>> lists_;
  std::vector<std::size_t> order_;
  std::vector<double> suffix_min_;
  std::vector<double> suffix_max_;
  ChoiceVector current_;
  ChoiceVector best_;
  double best_cost_ = 0.0;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool truncated_ = false;
};

}  // namespace detail

// Among all choices built from the per-group tie sets, finds a feasible
// one of maximal cost (equivalently, minimal f2 at or above -budget) by
// depth-first search with cost-bound pruning. The fallback must itself
// be a feasible member; it seeds the incumbent, so even a truncated scan
// returns a valid result and can only match or improve on it.
inline TieScanResult scan_ties(const Instance& inst,
                               const std::vector<std::vector<std::int32_t>>& per_group_ties,
                               double budget, const ChoiceVector& fallback,
                               std::uint64_t node_cap = kDefaultNodeCap) {
  if (node_cap < 1) throw Error(ErrorCode::InvalidSpec, "node_cap must be >= 1");
  if (per_group_ties.size() != inst.group_count())
    throw Error(ErrorCode::InvalidSpec, "tie sets do not match group count");
  for (std::size_t i = 0; i < per_group_ties.size(); ++i)
    if (per_group_ties[i].empty())
      throw Error(ErrorCode::InvalidSpec, "empty tie set in group " + std::to_string(i));
  if (-evaluate(inst, fallback).f2 > budget)
    throw Error(ErrorCode::InvalidSpec, "fallback choice is infeasible");

  detail::TieScanner scanner(inst, per_group_ties, budget, fallback, node_cap);
  TieScanResult r = scanner.run();
  r.s_cardinality = 1;
  for (const auto& t : per_group_ties)
    r.s_cardinality = detail::saturating_mul_u64(r.s_cardinality, t.size());
  return r;
}

}  // namespace mckp

#endif  // MCKP_TIE_SCAN_HPP_
