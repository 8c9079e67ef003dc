#ifndef MCKP_GENERATE_HPP_
#define MCKP_GENERATE_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mckp/errors.hpp"
#include "mckp/model.hpp"
#include "mckp/rng.hpp"

namespace mckp {

enum class GenKind { Uncorrelated, WeaklyCorrelated };

inline const char* gen_kind_name(GenKind k) {
  return k == GenKind::Uncorrelated ? "unc" : "wco";
}

inline GenKind gen_kind_from_name(const std::string& s) {
  if (s == "unc") return GenKind::Uncorrelated;
  if (s == "wco") return GenKind::WeaklyCorrelated;
  throw Error(ErrorCode::InvalidSpec, "unknown instance kind '" + s + "'");
}

// Parameters of one random problem class: k groups of n items with
// values in [1, R]. Weakly correlated instances draw each profit within
// +-wco_halfwidth of the item's cost (clamped below at 1).
struct GenSpec {
  GenKind kind = GenKind::Uncorrelated;
  int k = 1;
  int n = 1;
  int value_range = 10000;  // R
  std::uint64_t seed = 0;
  int wco_halfwidth = 10;
};

inline void check_gen_spec(const GenSpec& spec) {
  if (spec.k < 1 || spec.n < 1 || spec.value_range < 1)
    throw Error(ErrorCode::InvalidSpec, "k, n and R must all be >= 1");
  if (spec.wco_halfwidth < 0)
    throw Error(ErrorCode::InvalidSpec, "halfwidth must be >= 0");
  if (spec.kind == GenKind::WeaklyCorrelated && spec.value_range <= spec.wco_halfwidth)
    throw Error(ErrorCode::InvalidSpec, "weakly correlated instances need R > halfwidth");
}

// Budget rule shared by both classes:
//   c = half the sum over groups of (cheapest + dearest cost),
//   b = c +- uniform integer from [0, floor(c/4)], the sign drawn first
//       with probability one half each.
// When the cost sum is odd, c (and so b) carries an exact .5 fraction;
// it is kept rather than rounded, and the instance is then classified
// as real-valued.
inline double compute_budget(const std::vector<Group>& groups, Rng& rng) {
  double sum = 0.0;
  for (const Group& g : groups) {
    double cmin = g.items[0].cost, cmax = g.items[0].cost;
    for (const Item& it : g.items) {
      cmin = std::min(cmin, it.cost);
      cmax = std::max(cmax, it.cost);
    }
    sum += cmin + cmax;
  }
  const double c = sum / 2.0;
  const double r = std::floor(c / 4.0);
  const bool minus = rng.below(2) == 1;
  const double offset =
      static_cast<double>(rng.below(static_cast<std::uint64_t>(r) + 1));
  return minus ? c - offset : c + offset;
}

// Draws one instance of the class. For every item the profit is drawn
// before the cost (uncorrelated) or after it (weakly correlated); the
// budget draws follow all item draws on the same stream, so a (spec,
// generator) pair fully determines the instance.
inline Instance generate(const GenSpec& spec) {
  check_gen_spec(spec);
  Rng rng(spec.seed);
  const std::uint64_t R = static_cast<std::uint64_t>(spec.value_range);
  std::vector<Group> groups(static_cast<std::size_t>(spec.k));
  for (auto& g : groups) {
    g.items.resize(static_cast<std::size_t>(spec.n));
    for (auto& item : g.items) {
      if (spec.kind == GenKind::Uncorrelated) {
        item.profit = static_cast<double>(1 + rng.below(R));
        item.cost = static_cast<double>(1 + rng.below(R));
      } else {
        const double c = static_cast<double>(1 + rng.below(R));
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(spec.wco_halfwidth) + 1;
        const double p = c - spec.wco_halfwidth + static_cast<double>(rng.below(span));
        item.cost = c;
        item.profit = std::max(1.0, p);
      }
    }
  }
  const double budget = compute_budget(groups, rng);
  return validate_instance(std::move(groups), budget);
}

}  // namespace mckp

#endif  // MCKP_GENERATE_HPP_
