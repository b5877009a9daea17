#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "polyns/diagnostics.hpp"
#include "polyns/model.hpp"
#include "polyns/random.hpp"
#include "polyns/slice.hpp"

namespace polyns {

struct RunConfig {
  int n_live = 500;
  int n_repeat = 5;
  double precision = 1e-3;  // stop when dZ/Z drops below this
  std::uint64_t sampler_seed = 0;
  bool compute_derived = true;
  bool feedback = false;               // progress lines on feedback_stream
  std::ostream* feedback_stream = nullptr;  // nullptr means std::cerr
  bool trapezoid_weights = false;  // average neighboring contours in dX weights
  std::uint64_t max_iterations = 0;  // 0: default cap of 100000 * n_live
  int whitening_interval = 0;        // 0: rebuild every n_live/2 steps
  SliceConfig slice;
};

/// Mutable state of the nested-sampling loop.
struct EngineState {
  std::vector<LivePoint> live;
  std::uint64_t iteration = 0;  // number of dead points so far
  double log_x = 0.0;           // log X_i under deterministic compression
  double log_z = neg_inf;       // running log-evidence
  double log_zw_sq = neg_inf;   // log sum (L_i dX_i)^2
  double h_accum = 0.0;         // running information (Skilling update)
  std::vector<DeadPoint> dead;  // non-decreasing in log_like
  std::vector<int> insertion_indexes;
  std::uint64_t n_eval = 0;
  std::uint64_t plateau_flags = 0;  // evictions tied with a surviving point
  double prev_log_l_star = neg_inf;
};

struct RunResult {
  double log_z = neg_inf;
  double log_z_err = 0.0;
  double ess = 0.0;
  std::uint64_t n_eval = 0;
  double ks_p = 1.0;  // headline insertion-test p-value
  TestReport insertion_report;
  std::vector<DeadPoint> dead;  // log_weight normalized: exp sums to one
  std::vector<int> insertion_indexes;
  std::vector<LivePoint> posterior_samples;  // equal weight
  std::vector<LivePoint> prior_samples;      // fresh prior draws, equal weight
  RunStats stats;
  std::vector<std::string> warnings;
  bool truncated = false;
  std::uint64_t plateau_flags = 0;
  int n_live = 0;
};

/// Draws n_live points i.i.d. from the prior (uniform on the cube) with
/// birth contour -inf.
EngineState initialize(const ModelSpec& model, int n_live, RandomSource& rng,
                       bool with_derived = true);

/// One eviction/replacement cycle: move the worst live point to the dead
/// list with weight L* dX_i, accumulate the evidence, draw a replacement
/// from the constrained prior, and record its insertion index.
void step(EngineState& state, const ModelSpec& model, const RunConfig& config,
          ReplacementSampler& sampler, RandomSource& rng);

/// log of the unsummed evidence estimate: mean live likelihood times the
/// current volume.
double remaining_log_evidence(const EngineState& state);

/// True once the remaining evidence is below epsilon relative to the sum.
bool should_stop(const EngineState& state, double epsilon);

/// Consumes the remaining live points into the dead list with equal volume
/// shares X_final / n_live, normalizes weights, and assembles the result.
RunResult finalize(EngineState state, const ModelSpec& model,
                   const RunConfig& config, RandomSource& rng);

/// Full run with the default whitened slice sampler.
RunResult run(const ModelSpec& model, const RunConfig& config);

/// Full run with an injected replacement sampler (used by tests).
RunResult run(const ModelSpec& model, const RunConfig& config,
              ReplacementSampler& sampler);

}  // namespace polyns
