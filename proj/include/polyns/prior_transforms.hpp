#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace polyns {

/// Inverse of the standard normal CDF (Wichura's PPND16 rational
/// approximation). Relative error stays below 1e-9 on (1e-300, 1 - 1e-16).
/// Throws std::domain_error for p outside (0, 1).
double inverse_normal_cdf(double p);

// Inverse-transform maps from a U(0,1) draw to common priors. Each map is
// non-decreasing in x. Families with unbounded support refuse x values that
// would map to +-inf (std::domain_error); bad shape parameters raise
// std::invalid_argument.

double uniform_prior(double x, double lo, double hi);
double normal_prior(double x, double mu, double sigma);
double std_normal_prior(double x);
double half_normal_prior(double x, double sigma);
double exponential_prior(double x, double rate);
double cauchy_prior(double x, double loc, double scale);
double log_uniform_prior(double x, double lo, double hi);
long long discrete_uniform_prior(double x, long long lo, long long hi);

/// One named transform family; shape parameters are passed positionally.
struct TransformFamily {
  std::string name;
  int arity = 0;  // number of shape parameters
  std::function<double(double, std::span<const double>)> map;
  double x_min = 0.0;  // admissible range of the uniform draw
  double x_max = 1.0;
};

/// Registry of the families above, for generic property checks.
const std::vector<TransformFamily>& transform_families();

}  // namespace polyns
