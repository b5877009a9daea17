#include "polyns/whitening.hpp"

#include <cmath>
#include <stdexcept>

namespace polyns {

namespace {

// In-place lower Cholesky of a row-major symmetric matrix. Returns false
// when a pivot falls to or below pivot_floor: rank-deficient inputs can
// yield junk positive pivots at rounding scale, which must count as failure
// so the regularization path engages.
bool cholesky(std::vector<double>& a, std::size_t n, double pivot_floor) {
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
    if (!(d > pivot_floor)) return false;
    const double ljj = std::sqrt(d);
    a[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = s / ljj;
    }
  }
  // zero the upper triangle
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a[i * n + j] = 0.0;
  return true;
}

}  // namespace

WhiteningTransform WhiteningTransform::identity(std::size_t dim) {
  WhiteningTransform t;
  t.dim_ = dim;
  t.mean_.assign(dim, 0.0);
  t.chol_.assign(dim * dim, 0.0);
  for (std::size_t d = 0; d < dim; ++d) t.chol_[d * dim + d] = 1.0;
  t.identity_ = true;
  return t;
}

std::vector<double> WhiteningTransform::to_cube_direction(
    std::span<const double> w) const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += chol_[i * dim_ + j] * w[j];
    out[i] = s;
  }
  return out;
}

std::vector<double> WhiteningTransform::to_cube(std::span<const double> w) const {
  std::vector<double> out = to_cube_direction(w);
  for (std::size_t i = 0; i < dim_; ++i) out[i] += mean_[i];
  return out;
}

std::vector<double> WhiteningTransform::to_whitened(
    std::span<const double> x) const {
  std::vector<double> w(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = x[i] - mean_[i];
    for (std::size_t j = 0; j < i; ++j) s -= chol_[i * dim_ + j] * w[j];
    w[i] = s / chol_[i * dim_ + i];
  }
  return w;
}

WhiteningTransform build_whitening(std::span<const std::vector<double>> live_cubes) {
  if (live_cubes.empty()) throw std::invalid_argument("build_whitening: no points");
  const std::size_t n = live_cubes.size();
  const std::size_t dim = live_cubes.front().size();

  if (n < dim + 1) return WhiteningTransform::identity(dim);

  WhiteningTransform t;
  t.dim_ = dim;
  t.mean_.assign(dim, 0.0);
  for (const auto& x : live_cubes)
    for (std::size_t d = 0; d < dim; ++d) t.mean_[d] += x[d];
  for (std::size_t d = 0; d < dim; ++d) t.mean_[d] /= static_cast<double>(n);

  std::vector<double> cov(dim * dim, 0.0);
  for (const auto& x : live_cubes)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        cov[i * dim + j] += (x[i] - t.mean_[i]) * (x[j] - t.mean_[j]);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      cov[i * dim + j] /= static_cast<double>(n - 1);
      cov[j * dim + i] = cov[i * dim + j];
    }

  double trace = 0.0;
  for (std::size_t d = 0; d < dim; ++d) trace += cov[d * dim + d];
  const double scale = trace / static_cast<double>(dim);

  // Fully collapsed cloud: the covariance carries no information at all, so
  // use a small isotropic map instead of factorizing rounding noise.
  if (!(scale > 1e-30)) {
    t.chol_.assign(dim * dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d)
      t.chol_[d * dim + d] = std::sqrt(1e-12);
    t.identity_ = false;
    t.regularized_ = true;
    return t;
  }

  const double pivot_floor = 1e-13 * scale;
  t.chol_ = cov;
  if (cholesky(t.chol_, dim, pivot_floor)) {
    t.identity_ = false;
    return t;
  }

  // Rank-deficient covariance: add eps to the diagonal, escalating if needed.
  double eps = 1e-12 * scale;
  for (int attempt = 0; attempt < 6; ++attempt) {
    t.chol_ = cov;
    for (std::size_t d = 0; d < dim; ++d) t.chol_[d * dim + d] += eps;
    if (cholesky(t.chol_, dim, pivot_floor)) {
      t.identity_ = false;
      t.regularized_ = true;
      return t;
    }
    eps *= 100.0;
  }
  return WhiteningTransform::identity(dim);
}

}  // namespace polyns
