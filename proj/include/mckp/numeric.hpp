#ifndef MCKP_NUMERIC_HPP_
#define MCKP_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "mckp/model.hpp"

namespace mckp {

// Relative tolerance used by the floating-point comparison path for
// real-valued data. Integral data never goes through it.
inline constexpr double kDefaultRelTol = 1e-9;

inline double comparison_tolerance(double x, double y, double rel_tol = kDefaultRelTol) {
  return rel_tol * std::max({1.0, std::fabs(x), std::fabs(y)});
}

inline bool approx_eq(double x, double y, double rel_tol = kDefaultRelTol) {
  return std::fabs(x - y) <= comparison_tolerance(x, y, rel_tol);
}

namespace detail {

using Int128 = __int128;

inline std::uint64_t saturating_mul_u64(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Exact arithmetic applies when both weights are exact integers and the
// total scalarized score provably fits a signed 128-bit accumulator.
inline bool exact_weights_ok(const Instance& inst, double wp, double wc) {
  if (!inst.integral_values()) return false;
  if (!is_exact_integer(wp) || !is_exact_integer(wc)) return false;
  long double bound = (long double)inst.group_count() *
                      (std::fabs(wp) * (long double)inst.max_profit_value() +
                       std::fabs(wc) * (long double)inst.max_cost_value());
  return bound < 0x1p126L;
}

}  // namespace detail

}  // namespace mckp

#endif  // MCKP_NUMERIC_HPP_
