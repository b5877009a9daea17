#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polyns/util.hpp"

namespace polyns {

/// A current sample of the run. Immutable value type once constructed.
struct LivePoint {
  std::vector<double> cube;     // unit-hypercube coordinates
  std::vector<double> params;   // physical parameters
  std::vector<double> derived;  // empty when derived output is disabled
  double log_like = neg_inf;
  double birth_log_like = neg_inf;  // contour L* active when the point was born
};

/// An evicted point. log_weight is log(L_i dX_i): unnormalized inside the
/// engine, normalized (summing to one in exp) on the final result.
struct DeadPoint : LivePoint {
  double log_weight = neg_inf;
};

/// The model-authoring contract: parameters live on the unit hypercube, the
/// prior enters through an inverse-transform map, and the likelihood must be
/// normalized if evidences are to be compared across models.
///
/// prior_transform must be deterministic. log_likelihood may return -inf
/// (zero likelihood) but never NaN or +inf. derived, when present, maps
/// physical parameters to named derived values and may be skipped entirely
/// by the run's derived switch.
struct ModelSpec {
  std::size_t dim = 0;
  std::function<std::vector<double>(std::span<const double>)> prior_transform;
  std::function<double(std::span<const double>)> log_likelihood;
  std::function<std::vector<double>(std::span<const double>)> derived;
  std::vector<std::string> param_names;
  std::vector<std::string> derived_names;
  std::shared_ptr<const void> data;  // opaque dataset handle
};

struct Evaluation {
  std::vector<double> params;
  std::vector<double> derived;
  double log_like = neg_inf;
};

/// Evaluates the model at a hypercube point. Throws ContractViolation when a
/// cube component leaves [0,1], when output sizes disagree with the declared
/// names, or when the model produces NaN or +inf.
Evaluation evaluate(const ModelSpec& model, std::span<const double> cube,
                    bool with_derived = true);

/// Convenience wrapper building a LivePoint from a cube draw.
LivePoint make_live_point(const ModelSpec& model, std::vector<double> cube,
                          bool with_derived, double birth_log_like);

/// Probes prior_transform and log_likelihood at the cube center and at
/// near-corner points, reporting contract violations (dimension mismatches,
/// NaN outputs, non-determinism). Report-only: never throws.
std::vector<std::string> validate_model(const ModelSpec& model);

}  // namespace polyns
