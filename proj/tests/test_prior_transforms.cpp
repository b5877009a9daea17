#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyns/prior_transforms.hpp"
#include "support/oracles.hpp"

using namespace polyns;

TEST_CASE("uniform_prior maps linearly") {
  CHECK(uniform_prior(0.25, 0.0, 4.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(uniform_prior(0.0, -3.0, 7.0) == doctest::Approx(-3.0));
  for (double a : {-2.0, 0.1, 5.0}) {
    const double b = a + 3.5;
    CHECK(uniform_prior(0.5, a, b) == doctest::Approx(0.5 * (a + b)));
  }
  CHECK_THROWS_AS(uniform_prior(0.5, 2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(uniform_prior(1.5, 0.0, 1.0), std::domain_error);
}

TEST_CASE("normal_prior matches the erf oracle") {
  CHECK(normal_prior(0.5, 3.0, 2.0) == doctest::Approx(3.0).epsilon(1e-12));
  // Phi(1) = 0.8413447...
  CHECK(std_normal_prior(0.8413447) == doctest::Approx(1.0).epsilon(1e-5));
  for (double x : {0.01, 0.2, 0.37, 0.49}) {
    const double lo = normal_prior(x, 1.0, 2.0);
    const double hi = normal_prior(1.0 - x, 1.0, 2.0);
    CHECK(lo + hi == doctest::Approx(2.0).epsilon(1e-9));  // symmetric about mu
  }
  CHECK_THROWS_AS(normal_prior(0.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(normal_prior(1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(normal_prior(0.5, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("inverse_normal_cdf is accurate over the full range") {
  // Newton-refine against the erf-based CDF and demand 1e-9 relative error.
  for (double x : {1e-300, 1e-100, 1e-30, 1e-10, 1e-4, 0.1, 0.3, 0.5000001,
                   0.7, 0.9, 0.9999, 1.0 - 1e-10, 1.0 - 1e-16}) {
    const double z = inverse_normal_cdf(x);
    double refined = z;
    for (int it = 0; it < 3; ++it) {
      const double pdf =
          std::exp(-0.5 * refined * refined) / std::sqrt(2.0 * M_PI);
      if (pdf == 0.0) break;
      refined -= (oracles::normal_cdf(refined) - x) / pdf;
    }
    const double scale = std::max(1.0, std::fabs(refined));
    CHECK(std::fabs(z - refined) / scale < 1e-9);
  }
  CHECK(inverse_normal_cdf(0.975) ==
        doctest::Approx(1.959963984540054).epsilon(1e-12));
}

TEST_CASE("exponential_prior analytic values") {
  CHECK(exponential_prior(0.5, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(exponential_prior(0.0, 4.2) == 0.0);
  CHECK(exponential_prior(1.0 - std::exp(-2.0), 2.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(exponential_prior(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(exponential_prior(1.0, 1.0), std::domain_error);
}

TEST_CASE("cauchy_prior quartiles") {
  CHECK(cauchy_prior(0.5, 2.0, 3.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cauchy_prior(0.75, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cauchy_prior(0.25, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(cauchy_prior(0.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(cauchy_prior(0.5, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("log_uniform_prior endpoints and geometric median") {
  CHECK(log_uniform_prior(0.5, 1.0, 100.0) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(log_uniform_prior(0.0, 0.3, 7.0) == doctest::Approx(0.3));
  CHECK(log_uniform_prior(1.0, 0.3, 7.0) == doctest::Approx(7.0));
  CHECK_THROWS_AS(log_uniform_prior(0.5, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(log_uniform_prior(0.5, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("discrete_uniform_prior cells") {
  CHECK(discrete_uniform_prior(0.0, 1851, 1962) == 1851);
  CHECK(discrete_uniform_prior(0.999999, 1851, 1962) == 1962);
  CHECK(discrete_uniform_prior(1.0, 1851, 1962) == 1962);
  CHECK(discrete_uniform_prior(0.5, 0, 1) == 1);
  CHECK_THROWS_AS(discrete_uniform_prior(0.5, 3, 2), std::invalid_argument);
}

TEST_CASE("half_normal_prior values") {
  CHECK(half_normal_prior(0.0, 2.0) == 0.0);
  // P(|Z| < 1) = 0.6826895...
  CHECK(half_normal_prior(0.6826895, 1.0) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(half_normal_prior(0.1, 1.5) < half_normal_prior(0.9, 1.5));
  CHECK_THROWS_AS(half_normal_prior(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(half_normal_prior(0.5, 0.0), std::invalid_argument);
}

namespace {

// CDFs for the inverse-pair property, built on erf/atan/log rather than the
// transforms under test.
double family_cdf(const std::string& name, double value,
                  std::span<const double> shape) {
  if (name == "uniform_prior") return (value - shape[0]) / (shape[1] - shape[0]);
  if (name == "normal_prior")
    return oracles::normal_cdf((value - shape[0]) / shape[1]);
  if (name == "std_normal_prior") return oracles::normal_cdf(value);
  if (name == "half_normal_prior")
    return 2.0 * oracles::normal_cdf(value / shape[0]) - 1.0;
  if (name == "exponential_prior") return 1.0 - std::exp(-shape[0] * value);
  if (name == "cauchy_prior")
    return 0.5 + std::atan((value - shape[0]) / shape[1]) / M_PI;
  if (name == "log_uniform_prior")
    return std::log(value / shape[0]) / std::log(shape[1] / shape[0]);
  return -1.0;  // discrete family: no continuous CDF
}

std::vector<double> family_shape(const polyns::TransformFamily& family) {
  if (family.name == "uniform_prior") return {-2.0, 3.0};
  if (family.name == "normal_prior") return {0.7, 1.3};
  if (family.name == "half_normal_prior") return {0.8};
  if (family.name == "exponential_prior") return {1.7};
  if (family.name == "cauchy_prior") return {-0.3, 0.9};
  if (family.name == "log_uniform_prior") return {0.1, 50.0};
  if (family.name == "discrete_uniform_prior") return {2.0, 11.0};
  return {};
}

}  // namespace

TEST_CASE("inverse-pair property: CDF(map(x)) == x") {
  for (const auto& family : transform_families()) {
    if (family.name == "discrete_uniform_prior") continue;
    INFO(family.name);
    const auto shape = family_shape(family);
    for (int i = 0; i <= 200; ++i) {
      const double x = 1e-6 + (1.0 - 2e-6) * i / 200.0;
      const double value = family.map(x, shape);
      CHECK(family_cdf(family.name, value, shape) ==
            doctest::Approx(x).epsilon(1e-8));
    }
  }
}

TEST_CASE("all transform maps are monotone non-decreasing") {
  for (const auto& family : transform_families()) {
    INFO(family.name);
    const auto shape = family_shape(family);
    double previous = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 500; ++i) {
      const double span = family.x_max - family.x_min;
      const double x = family.x_min + span * i / 500.0;
      const double value = family.map(x, shape);
      CHECK(value >= previous);
      previous = value;
    }
  }
}

TEST_CASE("distributional property: stratified draws reproduce the pdf") {
  // Map 1e5 equally spaced draws and compare histogram counts against the
  // 3-sigma Poisson band around N * (CDF(hi) - CDF(lo)) per bin.
  const int n_draws = 100000;
  const int n_bins = 40;
  for (const auto& family : transform_families()) {
    if (family.name == "discrete_uniform_prior" || family.name == "cauchy_prior")
      continue;  // lattice support / heavy tails need different binning
    INFO(family.name);
    const auto shape = family_shape(family);
    std::vector<double> values(n_draws);
    for (int i = 0; i < n_draws; ++i) {
      const double span = family.x_max - family.x_min;
      const double x = family.x_min + span * (i + 0.5) / n_draws;
      values[static_cast<std::size_t>(i)] = family.map(x, shape);
    }
    const double lo = family.map(family.x_min + 1e-4, shape);
    const double hi = family.map(family.x_max - 1e-4, shape);
    std::vector<int> counts(n_bins, 0);
    for (double v : values) {
      if (v < lo || v >= hi) continue;
      const int bin = static_cast<int>(n_bins * (v - lo) / (hi - lo));
      ++counts[static_cast<std::size_t>(std::min(bin, n_bins - 1))];
    }
    for (int b = 0; b < n_bins; ++b) {
      const double edge_lo = lo + (hi - lo) * b / n_bins;
      const double edge_hi = lo + (hi - lo) * (b + 1) / n_bins;
      const double expected =
          n_draws * (family_cdf(family.name, edge_hi, shape) -
                     family_cdf(family.name, edge_lo, shape));
      const double band = 3.0 * std::sqrt(std::max(expected, 1.0)) + 1.0;
      CHECK(std::fabs(counts[static_cast<std::size_t>(b)] - expected) <= band);
    }
  }
}
