#include "polyns/slice.hpp"

#include <cmath>
#include <string>

#include "polyns/errors.hpp"

namespace polyns {

namespace {

// Likelihood of the point at offset s along the line, or nullopt when the
// point leaves the unit cube (no evaluation spent).
struct LineProbe {
  const ModelSpec& model;
  const LivePoint& start;
  const std::vector<double>& dir_cube;
  SliceChainStats& stats;

  bool in_cube(double s, std::vector<double>& cube) const {
    cube.resize(start.cube.size());
    for (std::size_t d = 0; d < cube.size(); ++d) {
      cube[d] = start.cube[d] + s * dir_cube[d];
      if (!(cube[d] >= 0.0 && cube[d] <= 1.0)) return false;
    }
    return true;
  }

  // true when the point at offset s lies inside the slice {L > L*}
  bool in_slice(double s, double log_l_star) {
    std::vector<double> cube;
    if (!in_cube(s, cube)) return false;
    Evaluation ev = evaluate(model, cube, false);
    ++stats.n_eval;
    return ev.log_like > log_l_star;
  }
};

}  // namespace

LivePoint slice_step(const ModelSpec& model, const LivePoint& start,
                     std::span<const double> whitened_direction,
                     const WhiteningTransform& whitening, double log_l_star,
                     RandomSource& rng, const SliceConfig& cfg,
                     SliceChainStats& stats) {
  const std::vector<double> dir_cube =
      whitening.to_cube_direction(whitened_direction);
  LineProbe probe{model, start, dir_cube, stats};

  // Bracket of length width placed uniformly around the start point.
  double lo = -cfg.width * rng.uniform();
  double hi = lo + cfg.width;

  for (int i = 0; i < cfg.max_expand && probe.in_slice(lo, log_l_star); ++i) {
    lo -= cfg.width;
    ++stats.n_expand;
  }
  for (int i = 0; i < cfg.max_expand && probe.in_slice(hi, log_l_star); ++i) {
    hi += cfg.width;
    ++stats.n_expand;
  }

  // Shrinkage: uniform proposal in the bracket; a rejection moves the
  // violated end to the proposal. The start (s = 0) is in the slice, so the
  // bracket always contains an acceptable neighborhood.
  while (true) {
    if (hi - lo < cfg.stall_fraction * cfg.width)
      throw SamplerStall(
          "slice bracket collapsed without acceptance at log L* = " +
          std::to_string(log_l_star));
    const double s = rng.uniform(lo, hi);
    std::vector<double> cube;
    if (probe.in_cube(s, cube)) {
      Evaluation ev = evaluate(model, cube, false);
      ++stats.n_eval;
      if (ev.log_like > log_l_star) {
        LivePoint out;
        out.cube = std::move(cube);
        out.params = std::move(ev.params);
        out.log_like = ev.log_like;
        out.birth_log_like = log_l_star;
        return out;
      }
    }
    ++stats.n_contract;
    if (s < 0.0)
      lo = s;
    else
      hi = s;
  }
}

LivePoint generate_replacement(const ModelSpec& model,
                               std::span<const LivePoint> live,
                               double log_l_star, int n_repeat,
                               RandomSource& rng,
                               const WhiteningTransform& whitening,
                               const SliceConfig& cfg, bool with_derived,
                               SliceChainStats& stats) {
  if (live.empty())
    throw ContractViolation("generate_replacement: empty live set");
  if (n_repeat < 1)
    throw ContractViolation("generate_replacement: n_repeat must be >= 1");

  const std::size_t dim = model.dim;
  LivePoint current = live[rng.index(live.size())];

  std::vector<double> direction(dim);
  for (int rep = 0; rep < n_repeat; ++rep) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        direction[d] = rng.normal();
        norm += direction[d] * direction[d];
      }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (std::size_t d = 0; d < dim; ++d) direction[d] /= norm;

    current = slice_step(model, current, direction, whitening, log_l_star, rng,
                         cfg, stats);
  }

  current.birth_log_like = log_l_star;
  if (with_derived && model.derived) {
    current.derived = model.derived(current.params);
  }
  return current;
}

LivePoint SliceSampler::generate(const ModelSpec& model,
                                 std::span<const LivePoint> live,
                                 double log_l_star, RandomSource& rng,
                                 bool with_derived, SliceChainStats& stats) {
  if (calls_since_rebuild_ < 0 || calls_since_rebuild_ >= rebuild_interval_) {
    std::vector<std::vector<double>> cubes;
    cubes.reserve(live.size());
    for (const auto& pt : live) cubes.push_back(pt.cube);
    whitening_ = build_whitening(cubes);
    calls_since_rebuild_ = 0;
  }
  ++calls_since_rebuild_;
  stats.identity_whitening = whitening_.is_identity();
  return generate_replacement(model, live, log_l_star, n_repeat_, rng,
                              whitening_, cfg_, with_derived, stats);
}

}  // namespace polyns
