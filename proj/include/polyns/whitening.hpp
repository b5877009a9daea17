#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace polyns {

/// Affine change of coordinates that makes the live-point cloud approximately
/// isotropic: whitened w = L^{-1} (x - mean) with L the lower Cholesky factor
/// of the empirical cube-space covariance.
class WhiteningTransform {
 public:
  WhiteningTransform() = default;

  static WhiteningTransform identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  /// True when the transform fell back to the identity map (too few points).
  bool is_identity() const { return identity_; }

  /// True when diagonal regularization was needed to factorize.
  bool regularized() const { return regularized_; }

  const std::vector<double>& mean() const { return mean_; }

  /// Row-major lower-triangular Cholesky factor of the (regularized)
  /// covariance.
  const std::vector<double>& cholesky() const { return chol_; }

  /// Cube-space displacement of a whitened-space direction: L w.
  std::vector<double> to_cube_direction(std::span<const double> w) const;

  /// mean + L w.
  std::vector<double> to_cube(std::span<const double> w) const;

  /// L^{-1} (x - mean), by forward substitution.
  std::vector<double> to_whitened(std::span<const double> x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> mean_;
  std::vector<double> chol_;
  bool identity_ = true;
  bool regularized_ = false;

  friend WhiteningTransform build_whitening(
      std::span<const std::vector<double>> live_cubes);
};

/// Mean and Cholesky factor of the live-point empirical covariance. Falls
/// back to the identity transform with fewer than dim+1 points; adds diagonal
/// regularization eps = 1e-12 * trace/dim when the factorization fails.
WhiteningTransform build_whitening(std::span<const std::vector<double>> live_cubes);

}  // namespace polyns
