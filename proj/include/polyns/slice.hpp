#pragma once

#include <cstdint>
#include <span>

#include "polyns/model.hpp"
#include "polyns/random.hpp"
#include "polyns/whitening.hpp"

namespace polyns {

/// Bookkeeping for one replacement generation.
struct SliceChainStats {
  std::uint64_t n_eval = 0;      // likelihood evaluations
  std::uint64_t n_expand = 0;    // bracket step-out moves
  std::uint64_t n_contract = 0;  // shrinkage rejections
  bool identity_whitening = false;
};

struct SliceConfig {
  double width = 1.0;          // initial bracket length, in whitened units
  int max_expand = 10;         // step-out cap per bracket end
  double stall_fraction = 1e-12;  // bracket/width ratio that raises a stall
};

/// One slice-sampling move from `start` along a whitened-space direction:
/// place a bracket of length `cfg.width` uniformly around the start, step
/// each end out while it stays inside the slice {L > L*} (capped at
/// cfg.max_expand steps), then shrink on rejected proposals until a point
/// with log_like > log_l_star is accepted. Proposals leaving the unit cube
/// count as rejections: the prior has zero density there.
///
/// Throws SamplerStall when the bracket collapses below
/// cfg.stall_fraction * cfg.width without an acceptance.
LivePoint slice_step(const ModelSpec& model, const LivePoint& start,
                     std::span<const double> whitened_direction,
                     const WhiteningTransform& whitening, double log_l_star,
                     RandomSource& rng, const SliceConfig& cfg,
                     SliceChainStats& stats);

/// Draws one replacement from the likelihood-constrained prior: start from a
/// uniformly chosen surviving live point and extend a Markov chain by
/// n_repeat slice steps, each along a fresh isotropic direction in whitened
/// space. The final point is returned with birth_log_like = log_l_star.
/// Derived values are computed once, on the returned point only, when
/// with_derived is set.
LivePoint generate_replacement(const ModelSpec& model,
                               std::span<const LivePoint> live,
                               double log_l_star, int n_repeat,
                               RandomSource& rng,
                               const WhiteningTransform& whitening,
                               const SliceConfig& cfg, bool with_derived,
                               SliceChainStats& stats);

/// Strategy hook used by the engine to produce replacement points; `live`
/// holds the surviving points (the evicted one excluded).
class ReplacementSampler {
 public:
  virtual ~ReplacementSampler() = default;
  virtual LivePoint generate(const ModelSpec& model,
                             std::span<const LivePoint> live, double log_l_star,
                             RandomSource& rng, bool with_derived,
                             SliceChainStats& stats) = 0;
};

/// Default sampler: whitened random-direction slice sampling. The whitening
/// transform is rebuilt from the surviving live points every
/// rebuild_interval calls (covariance drifts slowly; rebuilding every step
/// would double the linear-algebra cost for no benefit).
class SliceSampler : public ReplacementSampler {
 public:
  SliceSampler(int n_repeat, SliceConfig cfg, int rebuild_interval)
      : n_repeat_(n_repeat), cfg_(cfg), rebuild_interval_(rebuild_interval) {}

  LivePoint generate(const ModelSpec& model, std::span<const LivePoint> live,
                     double log_l_star, RandomSource& rng, bool with_derived,
                     SliceChainStats& stats) override;

  const WhiteningTransform& whitening() const { return whitening_; }

 private:
  int n_repeat_;
  SliceConfig cfg_;
  int rebuild_interval_;
  int calls_since_rebuild_ = -1;  // -1: never built
  WhiteningTransform whitening_;
};

}  // namespace polyns
