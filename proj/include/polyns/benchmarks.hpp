#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyns/dataset.hpp"
#include "polyns/model.hpp"

namespace polyns {

// Example targets. Prior boxes are fixed, documented constants; additive
// likelihood constants are pinned so the global maximum of log L is zero
// (evidence scaling invariance makes the choice harmless).

/// theta ~ U(0,1); log L = sum_i [y_i log theta + (1-y_i) log(1-theta)].
/// Derived: logit(theta) and one simulated observation drawn via the model
/// seed. Analytic evidence for k successes in n trials: ln B(k+1, n-k+1).
ModelSpec bernoulli_model(const Dataset& data, std::uint64_t model_seed);

/// theta_i ~ U(0, 10 pi); log L = -(2 + prod_i cos(theta_i / 2))^5.
ModelSpec eggbox_model(std::size_t dim = 10);

/// theta ~ U(-5, 5)^2; log L = -(t1^2 + t2 - 11)^2 - (t1 + t2^2 - 7)^2.
ModelSpec himmelblau_model();

/// theta_i ~ U(-5.12, 5.12); log L = -10 dim - sum_i (t_i^2 - 10 cos 2 pi t_i).
ModelSpec rastrigin_model(std::size_t dim = 10);

/// theta_i ~ U(-5, 10); log L = -sum_i [100 (t_{i+1} - t_i^2)^2 + (1 - t_i)^2].
ModelSpec rosenbrock_model(std::size_t dim = 4);

/// theta_i ~ U(-1, 1); log L = -(r^2 - mu)^2 / (2 sigma^2), r^2 = sum t_i^2.
ModelSpec gaussian_shell_model(std::size_t dim = 5, double mu = 0.25,
                               double sigma = 0.01);

/// x ~ U(-100, 100); L = N(x | 0, sigma1^2) + N(x | 0, sigma2^2).
ModelSpec slab_spike_model(double sigma1 = 50.0, double sigma2 = 0.01);

/// Poisson counts per year with a rate that changes abruptly at an unknown
/// year: exponential priors on both rates, discrete uniform prior on the
/// change year. The change year is exposed as a derived quantity.
ModelSpec disaster_model(const Dataset& data);

struct BenchmarkInfo {
  std::string name;
  std::string builtin_data;  // JSON text of the shipped dataset, "" when none
  std::function<ModelSpec(const Dataset&, std::uint64_t model_seed)> make;
  std::optional<double> reference_log_z;  // published value, sanity reference
  std::optional<double> reference_log_z_err;
};

const std::vector<BenchmarkInfo>& benchmark_catalog();
const BenchmarkInfo* find_benchmark(std::string_view name);

}  // namespace polyns
