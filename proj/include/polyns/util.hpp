#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace polyns {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();
inline constexpr double pos_inf = std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without overflow; tolerates -inf on either side.
inline double log_add_exp(double a, double b) {
  if (a == neg_inf) return b;
  if (b == neg_inf) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

/// log sum_i exp(v_i); -inf for an empty or all -inf input.
inline double log_sum_exp(std::span<const double> v) {
  double hi = neg_inf;
  for (double x : v)
    if (x > hi) hi = x;
  if (hi == neg_inf) return neg_inf;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

}  // namespace polyns
