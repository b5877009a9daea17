#include "polyns/prior_transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace polyns {

namespace {

// PPND16 (Wichura, algorithm AS 241): rational approximations on three
// regions of p, accurate to ~1e-16 which is far inside the 1e-9 contract.
constexpr double kA[8] = {
    3.3871328727963666080e+0, 1.3314166789178437745e+2,
    1.9715909503065514427e+3, 1.3731693765509461125e+4,
    4.5921953931549871457e+4, 6.7265770927008700853e+4,
    3.3430575583588128105e+4, 2.5090809287301226727e+3};
constexpr double kB[8] = {
    1.0,                      4.2313330701600911252e+1,
    6.8718700749205790830e+2, 5.3941960214247511077e+3,
    2.1213794301586595867e+4, 3.9307895800092710610e+4,
    2.8729085735721942674e+4, 5.2264952788528545610e+3};
constexpr double kC[8] = {
    1.42343711074968357734e+0, 4.63033784615654529590e+0,
    5.76949722146069140550e+0, 3.64784832476320460504e+0,
    1.27045825245236838258e+0, 2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr double kD[8] = {
    1.0,                       2.05319162663775882187e+0,
    1.67638483018380384940e+0, 6.89767334985100004550e-1,
    1.48103976427480074590e-1, 1.51986665636164571966e-2,
    5.47593808499534494600e-4, 1.05075007164441684324e-9};
constexpr double kE[8] = {
    6.65790464350110377720e+0, 5.46378491116411436990e+0,
    1.78482653991729133580e+0, 2.96560571828504891230e-1,
    2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double kF[8] = {
    1.0,                       5.99832206555887937690e-1,
    1.36929880922735805310e-1, 1.48753612908506148525e-2,
    7.86869131145613259100e-4, 1.84631831751005468180e-5,
    1.42151175831644588870e-7, 2.04426310338993978564e-15};

double rational(const double (&num)[8], const double (&den)[8], double r) {
  double p = num[7];
  double q = den[7];
  for (int i = 6; i >= 0; --i) {
    p = p * r + num[i];
    q = q * r + den[i];
  }
  return p / q;
}

[[noreturn]] void endpoint_error(const char* fn, double x) {
  throw std::domain_error(std::string(fn) + ": draw x=" + std::to_string(x) +
                          " maps to an infinite value");
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_draw(double x, double lo_ok, double hi_ok, const char* fn) {
  if (!(x >= lo_ok && x <= hi_ok))
    throw std::domain_error(std::string(fn) + ": draw x=" + std::to_string(x) +
                            " outside admissible range");
}

}  // namespace

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("inverse_normal_cdf: p must lie strictly in (0,1)");
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * rational(kA, kB, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    value = rational(kC, kD, r - 1.6);
  } else {
    value = rational(kE, kF, r - 5.0);
  }
  return q < 0.0 ? -value : value;
}

double uniform_prior(double x, double lo, double hi) {
  require(lo < hi, "uniform_prior: requires lo < hi");
  require_draw(x, 0.0, 1.0, "uniform_prior");
  return lo + x * (hi - lo);
}

double normal_prior(double x, double mu, double sigma) {
  require(sigma > 0.0, "normal_prior: requires sigma > 0");
  if (x <= 0.0 || x >= 1.0) endpoint_error("normal_prior", x);
  return mu + sigma * inverse_normal_cdf(x);
}

double std_normal_prior(double x) { return normal_prior(x, 0.0, 1.0); }

double half_normal_prior(double x, double sigma) {
  require(sigma > 0.0, "half_normal_prior: requires sigma > 0");
  if (x >= 1.0) endpoint_error("half_normal_prior", x);
  require_draw(x, 0.0, 1.0, "half_normal_prior");
  if (x == 0.0) return 0.0;
  return sigma * inverse_normal_cdf(0.5 * (1.0 + x));
}

double exponential_prior(double x, double rate) {
  require(rate > 0.0, "exponential_prior: requires rate > 0");
  if (x >= 1.0) endpoint_error("exponential_prior", x);
  require_draw(x, 0.0, 1.0, "exponential_prior");
  return -std::log1p(-x) / rate;
}

double cauchy_prior(double x, double loc, double scale) {
  require(scale > 0.0, "cauchy_prior: requires scale > 0");
  if (x <= 0.0 || x >= 1.0) endpoint_error("cauchy_prior", x);
  return loc + scale * std::tan(M_PI * (x - 0.5));
}

double log_uniform_prior(double x, double lo, double hi) {
  require(lo > 0.0 && lo < hi, "log_uniform_prior: requires 0 < lo < hi");
  require_draw(x, 0.0, 1.0, "log_uniform_prior");
  return lo * std::pow(hi / lo, x);
}

long long discrete_uniform_prior(double x, long long lo, long long hi) {
  require(lo <= hi, "discrete_uniform_prior: requires lo <= hi");
  require_draw(x, 0.0, 1.0, "discrete_uniform_prior");
  const double cells = static_cast<double>(hi - lo + 1);
  auto k = static_cast<long long>(std::floor(x * cells));
  if (k > hi - lo) k = hi - lo;  // x = 1 lands in the top cell
  return lo + k;
}

const std::vector<TransformFamily>& transform_families() {
  static const std::vector<TransformFamily> families = {
      {"uniform_prior", 2,
       [](double x, std::span<const double> a) {
         return uniform_prior(x, a[0], a[1]);
       },
       0.0, 1.0},
      {"normal_prior", 2,
       [](double x, std::span<const double> a) {
         return normal_prior(x, a[0], a[1]);
       },
       1e-12, 1.0 - 1e-12},
      {"std_normal_prior", 0,
       [](double x, std::span<const double>) { return std_normal_prior(x); },
       1e-12, 1.0 - 1e-12},
      {"half_normal_prior", 1,
       [](double x, std::span<const double> a) {
         return half_normal_prior(x, a[0]);
       },
       0.0, 1.0 - 1e-12},
      {"exponential_prior", 1,
       [](double x, std::span<const double> a) {
         return exponential_prior(x, a[0]);
       },
       0.0, 1.0 - 1e-12},
      {"cauchy_prior", 2,
       [](double x, std::span<const double> a) {
         return cauchy_prior(x, a[0], a[1]);
       },
       1e-12, 1.0 - 1e-12},
      {"log_uniform_prior", 2,
       [](double x, std::span<const double> a) {
         return log_uniform_prior(x, a[0], a[1]);
       },
       0.0, 1.0},
      {"discrete_uniform_prior", 2,
       [](double x, std::span<const double> a) {
         return static_cast<double>(discrete_uniform_prior(
             x, static_cast<long long>(a[0]), static_cast<long long>(a[1])));
       },
       0.0, 1.0},
  };
  return families;
}

}  // namespace polyns
