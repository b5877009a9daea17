#include "polyns/benchmarks.hpp"

#include <bit>
#include <cmath>

#include "polyns/errors.hpp"
#include "polyns/prior_transforms.hpp"

namespace polyns {

namespace {

constexpr double two_pi = 2.0 * M_PI;

std::vector<std::string> numbered_names(const char* stem, std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back(std::string(stem) + std::to_string(i + 1));
  return names;
}

std::size_t dim_from(const Dataset& data, std::size_t fallback) {
  const long long dim = data.get_int_or("dim", static_cast<long long>(fallback));
  if (dim < 1) throw DataError(data.origin() + ": \"dim\" must be positive");
  return static_cast<std::size_t>(dim);
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic U(0,1) keyed on (seed, value): simulated draws in derived
// quantities stay reproducible and thread-safe without shared RNG state.
double keyed_uniform(std::uint64_t seed, double value) {
  const std::uint64_t h = splitmix64(seed ^ std::bit_cast<std::uint64_t>(value));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double normal_log_pdf(double x, double sigma) {
  return -0.5 * std::log(two_pi) - std::log(sigma) - 0.5 * (x / sigma) * (x / sigma);
}

}  // namespace

ModelSpec bernoulli_model(const Dataset& data, std::uint64_t model_seed) {
  const long long n = data.get_int("N");
  const std::vector<long long> y = data.get_int_array("y");
  if (n < 0 || y.size() != static_cast<std::size_t>(n))
    throw DataError(data.origin() + ": \"y\" must hold exactly N entries");
  long long successes = 0;
  for (long long yi : y) {
    if (yi != 0 && yi != 1)
      throw DataError(data.origin() + ": \"y\" entries must be 0 or 1");
    successes += yi;
  }
  const double k = static_cast<double>(successes);
  const double n_trials = static_cast<double>(n);

  ModelSpec model;
  model.dim = 1;
  model.param_names = {"theta"};
  model.derived_names = {"logit_theta", "y_sim"};
  model.prior_transform = [](std::span<const double> cube) {
    return std::vector<double>{uniform_prior(cube[0], 0.0, 1.0)};
  };
  model.log_likelihood = [k, n_trials](std::span<const double> params) {
    const double theta = params[0];
    double ll = 0.0;
    if (k > 0.0) ll += theta > 0.0 ? k * std::log(theta) : neg_inf;
    if (n_trials - k > 0.0)
      ll += theta < 1.0 ? (n_trials - k) * std::log1p(-theta) : neg_inf;
    return ll;
  };
  model.derived = [model_seed](std::span<const double> params) {
    const double theta = params[0];
    const double logit = std::log(theta) - std::log1p(-theta);
    const double y_sim = keyed_uniform(model_seed, theta) < theta ? 1.0 : 0.0;
    return std::vector<double>{logit, y_sim};
  };
  return model;
}

ModelSpec eggbox_model(std::size_t dim) {
  ModelSpec model;
  model.dim = dim;
  model.param_names = numbered_names("theta", dim);
  model.prior_transform = [](std::span<const double> cube) {
    std::vector<double> params(cube.size());
    for (std::size_t i = 0; i < cube.size(); ++i)
      params[i] = uniform_prior(cube[i], 0.0, 10.0 * M_PI);
    return params;
  };
  model.log_likelihood = [](std::span<const double> params) {
    double product = 1.0;
    for (double t : params) product *= std::cos(0.5 * t);
    return -std::pow(2.0 + product, 5.0);
  };
  return model;
}

ModelSpec himmelblau_model() {
  ModelSpec model;
  model.dim = 2;
  model.param_names = {"theta1", "theta2"};
  model.prior_transform = [](std::span<const double> cube) {
    return std::vector<double>{uniform_prior(cube[0], -5.0, 5.0),
                               uniform_prior(cube[1], -5.0, 5.0)};
  };
  model.log_likelihood = [](std::span<const double> params) {
    const double a = params[0] * params[0] + params[1] - 11.0;
    const double b = params[0] + params[1] * params[1] - 7.0;
    return -a * a - b * b;
  };
  return model;
}

ModelSpec rastrigin_model(std::size_t dim) {
  ModelSpec model;
  model.dim = dim;
  model.param_names = numbered_names("theta", dim);
  model.prior_transform = [](std::span<const double> cube) {
    std::vector<double> params(cube.size());
    for (std::size_t i = 0; i < cube.size(); ++i)
      params[i] = uniform_prior(cube[i], -5.12, 5.12);
    return params;
  };
  model.log_likelihood = [dim](std::span<const double> params) {
    double sum = 0.0;
    for (double t : params) sum += t * t - 10.0 * std::cos(two_pi * t);
    return -10.0 * static_cast<double>(dim) - sum;
  };
  return model;
}

ModelSpec rosenbrock_model(std::size_t dim) {
  if (dim < 2)
    throw std::invalid_argument("rosenbrock_model: needs at least 2 dimensions");
  ModelSpec model;
  model.dim = dim;
  model.param_names = numbered_names("theta", dim);
  model.prior_transform = [](std::span<const double> cube) {
    std::vector<double> params(cube.size());
    for (std::size_t i = 0; i < cube.size(); ++i)
      params[i] = uniform_prior(cube[i], -5.0, 10.0);
    return params;
  };
  model.log_likelihood = [](std::span<const double> params) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
      const double a = params[i + 1] - params[i] * params[i];
      const double b = 1.0 - params[i];
      sum += 100.0 * a * a + b * b;
    }
    return -sum;
  };
  return model;
}

ModelSpec gaussian_shell_model(std::size_t dim, double mu, double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("gaussian_shell_model: sigma must be positive");
  ModelSpec model;
  model.dim = dim;
  model.param_names = numbered_names("theta", dim);
  model.prior_transform = [](std::span<const double> cube) {
    std::vector<double> params(cube.size());
    for (std::size_t i = 0; i < cube.size(); ++i)
      params[i] = uniform_prior(cube[i], -1.0, 1.0);
    return params;
  };
  model.log_likelihood = [mu, sigma](std::span<const double> params) {
    double r_sq = 0.0;
    for (double t : params) r_sq += t * t;
    const double residual = r_sq - mu;
    return -residual * residual / (2.0 * sigma * sigma);
  };
  return model;
}

ModelSpec slab_spike_model(double sigma1, double sigma2) {
  if (!(sigma1 > 0.0 && sigma2 > 0.0))
    throw std::invalid_argument("slab_spike_model: sigmas must be positive");
  ModelSpec model;
  model.dim = 1;
  model.param_names = {"x"};
  model.prior_transform = [](std::span<const double> cube) {
    return std::vector<double>{uniform_prior(cube[0], -100.0, 100.0)};
  };
  model.log_likelihood = [sigma1, sigma2](std::span<const double> params) {
    return log_add_exp(normal_log_pdf(params[0], sigma1),
                       normal_log_pdf(params[0], sigma2));
  };
  return model;
}

ModelSpec disaster_model(const Dataset& data) {
  const std::vector<long long> years = data.get_int_array("year");
  const std::vector<long long> counts = data.get_int_array("count");
  if (years.empty() || years.size() != counts.size())
    throw DataError(data.origin() +
                    ": \"year\" and \"count\" must be non-empty and equally long");
  for (std::size_t i = 1; i < years.size(); ++i)
    if (years[i] != years[i - 1] + 1)
      throw DataError(data.origin() + ": years must be contiguous and ascending");
  for (long long c : counts)
    if (c < 0) throw DataError(data.origin() + ": counts must be non-negative");
  const double rate_early = data.get_real_or("rate_early", 1.0);
  const double rate_late = data.get_real_or("rate_late", 1.0);
  if (!(rate_early > 0.0 && rate_late > 0.0))
    throw DataError(data.origin() + ": exponential prior rates must be positive");
  const long long first_year = years.front();
  const long long last_year = years.back();

  std::vector<double> count_values(counts.begin(), counts.end());
  double log_factorials = 0.0;
  for (double c : count_values) log_factorials += std::lgamma(c + 1.0);

  ModelSpec model;
  model.dim = 3;
  model.param_names = {"early_rate", "late_rate", "change_year"};
  model.derived_names = {"change_year"};
  model.prior_transform = [rate_early, rate_late, first_year,
                           last_year](std::span<const double> cube) {
    return std::vector<double>{
        exponential_prior(cube[0], rate_early),
        exponential_prior(cube[1], rate_late),
        static_cast<double>(discrete_uniform_prior(cube[2], first_year, last_year))};
  };
  model.log_likelihood = [count_values, log_factorials,
                          first_year](std::span<const double> params) {
    const double early = params[0];
    const double late = params[1];
    const auto change = static_cast<long long>(params[2]);
    double ll = -log_factorials;
    for (std::size_t i = 0; i < count_values.size(); ++i) {
      const long long year = first_year + static_cast<long long>(i);
      const double rate = year < change ? early : late;
      const double c = count_values[i];
      if (c > 0.0) ll += rate > 0.0 ? c * std::log(rate) : neg_inf;
      ll -= rate;
    }
    return ll;
  };
  model.derived = [](std::span<const double> params) {
    return std::vector<double>{params[2]};
  };
  return model;
}

namespace {

// The shipped Bernoulli toy data: N = 10 trials with k = 2 successes.
constexpr const char* kBernoulliData =
    R"({"N": 10, "y": [0, 1, 0, 0, 0, 0, 0, 0, 0, 1]})";

// Annual counts of UK coal-mining disasters, 1851-1962.
constexpr const char* kDisasterData = R"({
  "year": [1851,1852,1853,1854,1855,1856,1857,1858,1859,1860,
           1861,1862,1863,1864,1865,1866,1867,1868,1869,1870,
           1871,1872,1873,1874,1875,1876,1877,1878,1879,1880,
           1881,1882,1883,1884,1885,1886,1887,1888,1889,1890,
           1891,1892,1893,1894,1895,1896,1897,1898,1899,1900,
           1901,1902,1903,1904,1905,1906,1907,1908,1909,1910,
           1911,1912,1913,1914,1915,1916,1917,1918,1919,1920,
           1921,1922,1923,1924,1925,1926,1927,1928,1929,1930,
           1931,1932,1933,1934,1935,1936,1937,1938,1939,1940,
           1941,1942,1943,1944,1945,1946,1947,1948,1949,1950,
           1951,1952,1953,1954,1955,1956,1957,1958,1959,1960,
           1961,1962],
  "count": [4,5,4,0,1,4,3,4,0,6,
            3,3,4,0,2,6,3,3,5,4,
            5,3,1,4,4,1,5,5,3,4,
            2,5,2,2,3,4,2,1,3,2,
            2,1,1,1,1,3,0,0,1,0,
            1,1,0,0,3,1,0,3,2,2,
            0,1,1,1,0,1,0,1,0,0,
            0,2,1,0,0,0,1,1,0,2,
            3,3,1,1,2,1,1,1,1,2,
            4,2,0,0,1,4,0,0,0,1,
            0,0,0,0,0,1,0,0,1,0,
            1,0]
})";

}  // namespace

const std::vector<BenchmarkInfo>& benchmark_catalog() {
  static const std::vector<BenchmarkInfo> catalog = {
      {"bernoulli", kBernoulliData,
       [](const Dataset& d, std::uint64_t seed) { return bernoulli_model(d, seed); },
       -6.2048, 0.0004},
      {"eggbox", "",
       [](const Dataset& d, std::uint64_t) { return eggbox_model(dim_from(d, 10)); },
       -14.9, 0.1},
      {"himmelblau", "",
       [](const Dataset&, std::uint64_t) { return himmelblau_model(); }, -4.66, 0.1},
      {"rastrigin", "",
       [](const Dataset& d, std::uint64_t) {
         return rastrigin_model(dim_from(d, 10));
       },
       -23.4, 0.2},
      {"rosenbrock", "",
       [](const Dataset& d, std::uint64_t) {
         return rosenbrock_model(dim_from(d, 4));
       },
       -9.5, 0.2},
      {"shell", "",
       [](const Dataset& d, std::uint64_t) {
         return gaussian_shell_model(dim_from(d, 5), d.get_real_or("mu", 0.25),
                                     d.get_real_or("sigma", 0.01));
       },
       -5.8, 0.1},
      {"slab_spike", "",
       [](const Dataset& d, std::uint64_t) {
         return slab_spike_model(d.get_real_or("sigma1", 50.0),
                                 d.get_real_or("sigma2", 0.01));
       },
       -4.63, 0.07},
      {"disaster", kDisasterData,
       [](const Dataset& d, std::uint64_t) { return disaster_model(d); },
       std::nullopt, std::nullopt},
  };
  return catalog;
}

const BenchmarkInfo* find_benchmark(std::string_view name) {
  for (const auto& entry : benchmark_catalog())
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace polyns
