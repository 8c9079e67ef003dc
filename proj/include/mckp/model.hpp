#ifndef MCKP_MODEL_HPP_
#define MCKP_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mckp/errors.hpp"

namespace mckp {

// One selectable item: nonnegative profit and nonnegative cost.
struct Item {
  double profit = 0.0;
  double cost = 0.0;
};

// A mutually exclusive set of items; exactly one must be picked.
struct Group {
  std::vector<Item> items;

  std::size_t size() const { return items.size(); }
};

enum class ValueClass { AllIntegral, Real };

// One chosen item index per group. Keeping an index per group (rather
// than an n-length 0/1 vector) enforces the one-item-per-group rule by
// construction.
struct ChoiceVector {
  std::vector<std::int32_t> picks;

  bool operator==(const ChoiceVector& other) const = default;
};

// Objective-space image of a choice: f1 = total profit, f2 = negated
// total cost. With nonnegative data, f1 >= 0 and f2 <= 0.
struct Outcome {
  double f1 = 0.0;
  double f2 = 0.0;

  bool operator==(const Outcome& other) const = default;
};

namespace detail {

// Integral and exactly representable in a 64-bit double (|v| <= 2^53),
// so the value survives a round trip through std::int64_t.
inline bool is_exact_integer(double v) {
  constexpr double kMaxExact = 9007199254740992.0;  // 2^53
  return std::floor(v) == v && std::fabs(v) <= kMaxExact;
}

inline std::int64_t as_i64(double v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

// A validated problem: k nonempty groups, nonnegative data, budget b.
class Instance {
 public:
  std::size_t group_count() const { return groups_.size(); }
  const Group& group(std::size_t i) const { return groups_[i]; }
  const std::vector<Group>& groups() const { return groups_; }
  double budget() const { return budget_; }
  ValueClass value_class() const { return value_class_; }

  // True when every profit and cost is an exact integer. The budget may
  // still be half-integral (the generator's budget formula produces one
  // whenever the min+max cost sum is odd); comparisons of integral
  // objective values against such a budget are still exact in doubles,
  // so the solvers can use the exact integer path.
  bool integral_values() const { return integral_values_; }

  std::size_t total_items() const {
    std::size_t n = 0;
    for (const auto& g : groups_) n += g.size();
    return n;
  }

  std::size_t max_group_size() const {
    std::size_t m = 0;
    for (const auto& g : groups_) m = std::max(m, g.size());
    return m;
  }

  // Largest single profit / cost in the instance; cached for overflow guards.
  double max_profit_value() const { return max_profit_; }
  double max_cost_value() const { return max_cost_; }

  friend Instance validate_instance(std::vector<Group> groups, double budget);

 private:
  Instance(std::vector<Group> groups, double budget, ValueClass vc, bool iv,
           double max_profit, double max_cost)
      : groups_(std::move(groups)),
        budget_(budget),
        value_class_(vc),
        integral_values_(iv),
        max_profit_(max_profit),
        max_cost_(max_cost) {}

  std::vector<Group> groups_;
  double budget_;
  ValueClass value_class_;
  bool integral_values_;
  double max_profit_ = 0.0;
  double max_cost_ = 0.0;
};

// Checks raw groups and a budget against the model invariants and
// derives the value class. Throws Error on malformed data.
inline Instance validate_instance(std::vector<Group> groups, double budget) {
  if (groups.empty()) throw Error(ErrorCode::EmptyInstance, "instance has no groups");
  bool integral = detail::is_exact_integer(budget);
  bool values_integral = true;
  double max_profit = 0.0, max_cost = 0.0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Group& g = groups[i];
    if (g.items.empty())
      throw Error(ErrorCode::EmptyGroup, "group " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < g.items.size(); ++j) {
      const Item& it = g.items[j];
      if (!(it.profit >= 0.0) || !(it.cost >= 0.0))
        throw Error(ErrorCode::NegativeValue,
                    "item (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has a negative or non-finite value");
      if (!detail::is_exact_integer(it.profit) || !detail::is_exact_integer(it.cost))
        values_integral = false;
      max_profit = std::max(max_profit, it.profit);
      max_cost = std::max(max_cost, it.cost);
    }
  }
  if (!(budget >= 0.0))
    throw Error(ErrorCode::NegativeValue, "budget is negative or non-finite");
  ValueClass vc = (values_integral && integral) ? ValueClass::AllIntegral : ValueClass::Real;
  return Instance(std::move(groups), budget, vc, values_integral, max_profit, max_cost);
}

inline void check_choice(const Instance& inst, const ChoiceVector& choice) {
  if (choice.picks.size() != inst.group_count())
    throw Error(ErrorCode::IndexOutOfRange, "choice length does not match group count");
  for (std::size_t i = 0; i < choice.picks.size(); ++i) {
    std::int32_t j = choice.picks[i];
    if (j < 0 || static_cast<std::size_t>(j) >= inst.group(i).size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "pick " + std::to_string(j) + " out of range in group " + std::to_string(i));
  }
}

// f1 = sum of picked profits, f2 = negated sum of picked costs.
inline Outcome evaluate(const Instance& inst, const ChoiceVector& choice) {
  check_choice(inst, choice);
  double profit = 0.0;
  double cost = 0.0;
  for (std::size_t i = 0; i < choice.picks.size(); ++i) {
    const Item& it = inst.group(i).items[static_cast<std::size_t>(choice.picks[i])];
    profit += it.profit;
    cost += it.cost;
  }
  return Outcome{profit, -cost};
}

inline bool is_feasible(const Instance& inst, const ChoiceVector& choice) {
  return -evaluate(inst, choice).f2 <= inst.budget();
}

// Componentwise extremes over the whole choice set: the cheapest and
// most expensive total costs and the largest total profit, with the
// choices attaining them (lowest item index on ties).
struct GlobalBounds {
  double c_min = 0.0;
  double c_max = 0.0;
  double p_max = 0.0;
  ChoiceVector c_min_witness;
  ChoiceVector c_max_witness;
  ChoiceVector p_max_witness;
};

inline GlobalBounds global_bounds(const Instance& inst) {
  GlobalBounds gb;
  const std::size_t k = inst.group_count();
  gb.c_min_witness.picks.resize(k);
  gb.c_max_witness.picks.resize(k);
  gb.p_max_witness.picks.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& items = inst.group(i).items;
    std::size_t jmin = 0, jmax = 0, jp = 0;
    for (std::size_t j = 1; j < items.size(); ++j) {
      if (items[j].cost < items[jmin].cost) jmin = j;
      if (items[j].cost > items[jmax].cost) jmax = j;
      if (items[j].profit > items[jp].profit) jp = j;
    }
    gb.c_min += items[jmin].cost;
    gb.c_max += items[jmax].cost;
    gb.p_max += items[jp].profit;
    gb.c_min_witness.picks[i] = static_cast<std::int32_t>(jmin);
    gb.c_max_witness.picks[i] = static_cast<std::int32_t>(jmax);
    gb.p_max_witness.picks[i] = static_cast<std::int32_t>(jp);
  }
  return gb;
}

}  // namespace mckp

#endif  // MCKP_MODEL_HPP_
