#include "polyns/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyns {

double ks_statistic(std::span<const int> indexes, int n_live) {
  if (indexes.empty())
    throw std::invalid_argument("ks_statistic: empty index list");
  if (n_live < 1) throw std::invalid_argument("ks_statistic: n_live must be >= 1");

  std::vector<std::size_t> counts(static_cast<std::size_t>(n_live), 0);
  for (int idx : indexes) {
    if (idx < 0 || idx >= n_live)
      throw std::invalid_argument("ks_statistic: index " + std::to_string(idx) +
                                  " outside [0, " + std::to_string(n_live) + ")");
    ++counts[static_cast<std::size_t>(idx)];
  }

  const double n = static_cast<double>(indexes.size());
  double cumulative = 0.0;
  double d = 0.0;
  for (int k = 0; k < n_live; ++k) {
    cumulative += static_cast<double>(counts[static_cast<std::size_t>(k)]);
    const double ecdf = cumulative / n;
    const double uniform_cdf = static_cast<double>(k + 1) / n_live;
    d = std::max(d, std::fabs(ecdf - uniform_cdf));
  }
  return d;
}

double ks_p_value(double d, std::size_t n) {
  if (d < 0.0) throw std::invalid_argument("ks_p_value: d must be >= 0");
  if (n < 1) throw std::invalid_argument("ks_p_value: n must be >= 1");
  const double lambda = std::sqrt(static_cast<double>(n)) * d;
  if (lambda == 0.0) return 1.0;

  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 1000; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  const double p = 2.0 * sum;
  return std::clamp(p, 0.0, 1.0);
}

TestReport insertion_test(const InsertionRecord& record) {
  if (record.n_live < 1)
    throw std::invalid_argument("insertion_test: n_live must be >= 1");
  const int batch = record.batch_size > 0 ? record.batch_size : record.n_live;
  if (batch < 1) throw std::invalid_argument("insertion_test: batch size must be >= 1");

  TestReport report;
  report.batch_ratio = static_cast<double>(batch) / record.n_live;
  report.d_statistic = ks_statistic(record.indexes, record.n_live);
  report.p_value = ks_p_value(report.d_statistic, record.indexes.size());

  const std::size_t n_batches = record.indexes.size() / static_cast<std::size_t>(batch);
  if (n_batches == 0) {
    report.per_batch_min_p = report.p_value;
    return report;
  }
  double min_p = 1.0;
  for (std::size_t b = 0; b < n_batches; ++b) {
    std::span<const int> chunk(record.indexes.data() + b * batch,
                               static_cast<std::size_t>(batch));
    min_p = std::min(min_p,
                     ks_p_value(ks_statistic(chunk, record.n_live), chunk.size()));
  }
  report.per_batch_min_p =
      1.0 - std::pow(1.0 - min_p, static_cast<double>(n_batches));
  return report;
}

double kish_ess(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("kish_ess: no weights");
  double sum = 0.0, sum_sq = 0.0;
  for (double w : weights) {
    if (w < 0.0 || std::isnan(w))
      throw std::invalid_argument("kish_ess: weights must be non-negative");
    sum += w;
    sum_sq += w * w;
  }
  if (sum_sq == 0.0) throw std::invalid_argument("kish_ess: all weights are zero");
  return sum * sum / sum_sq;
}

RunStats summary_stats(std::span<const DeadPoint> dead, double log_z) {
  RunStats stats;
  for (const auto& pt : dead) {
    const double p = std::exp(pt.log_weight);
    if (p == 0.0) continue;
    stats.d_kl += p * (pt.log_like - log_z);
    stats.log_l_p += p * pt.log_like;
  }
  for (const auto& pt : dead) {
    const double p = std::exp(pt.log_weight);
    if (p == 0.0) continue;
    const double c = pt.log_like - stats.log_l_p;
    stats.d_g += 2.0 * p * c * c;
  }
  return stats;
}

}  // namespace polyns
