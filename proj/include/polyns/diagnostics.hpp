#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyns/model.hpp"

namespace polyns {

/// Insertion indexes collected over a run: for each replacement, the number
/// of surviving live points with a strictly smaller log-likelihood. Uniform
/// on {0, ..., n_live-1} when the constrained prior is sampled faithfully.
struct InsertionRecord {
  std::vector<int> indexes;
  int n_live = 0;
  int batch_size = 0;  // 0 means n_live
};

struct TestReport {
  double p_value = 1.0;         // whole-run KS p-value (headline)
  double d_statistic = 0.0;
  double per_batch_min_p = 1.0;  // Sidak-corrected minimum batch p-value
  double batch_ratio = 1.0;      // batch_size / n_live
};

/// Sup-distance between the empirical CDF of the indexes and the discrete
/// uniform on {0, ..., n_live-1}, compared at the integer support points.
double ks_statistic(std::span<const int> indexes, int n_live);

/// Asymptotic Kolmogorov tail probability Q(sqrt(n) d), from the alternating
/// series 2 sum_k (-1)^(k-1) exp(-2 k^2 (sqrt(n) d)^2), truncated when terms
/// drop below 1e-12 and clamped to [0, 1].
double ks_p_value(double d, std::size_t n);

/// Whole-run KS p-value plus the Sidak-corrected minimum over consecutive
/// batches of batch_size indexes.
TestReport insertion_test(const InsertionRecord& record);

/// Kish effective sample size (sum w)^2 / sum w^2.
double kish_ess(std::span<const double> weights);

/// Posterior summary statistics over normalized dead-point weights.
struct RunStats {
  double d_kl = 0.0;     // KL divergence from prior to posterior
  double log_l_p = 0.0;  // posterior mean log-likelihood
  double d_g = 0.0;      // Gaussian model dimensionality
};

/// dead must carry normalized log-weights (exp sums to one):
/// d_kl = sum p_i (log L_i - log Z), log_l_p = sum p_i log L_i,
/// d_g = 2 sum p_i (log L_i - log_l_p)^2.
RunStats summary_stats(std::span<const DeadPoint> dead, double log_z);

}  // namespace polyns
