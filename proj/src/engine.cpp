#include "polyns/engine.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "polyns/errors.hpp"

namespace polyns {

namespace {

std::size_t worst_live_index(const std::vector<LivePoint>& live) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < live.size(); ++i)
    if (live[i].log_like < live[worst].log_like) worst = i;
  return worst;
}

void accumulate_evidence(EngineState& state, double log_weight, double log_like) {
  const double log_z_new = log_add_exp(state.log_z, log_weight);
  if (log_weight != neg_inf) {
    // Skilling's running information update
    const double term = std::exp(log_weight - log_z_new) * log_like;
    if (state.log_z == neg_inf) {
      state.h_accum = term - log_z_new;
    } else {
      state.h_accum = term + std::exp(state.log_z - log_z_new) *
                                 (state.h_accum + state.log_z) -
                      log_z_new;
    }
    state.log_zw_sq = log_add_exp(state.log_zw_sq, 2.0 * log_weight);
  }
  state.log_z = log_z_new;
}

std::uint64_t iteration_cap(const RunConfig& config) {
  return config.max_iterations > 0
             ? config.max_iterations
             : 100000ull * static_cast<std::uint64_t>(config.n_live);
}

/// Systematic resampling of `count` equal-weight points proportional to the
/// normalized dead weights.
std::vector<LivePoint> resample_posterior(const std::vector<DeadPoint>& dead,
                                          std::size_t count, RandomSource& rng) {
  std::vector<LivePoint> out;
  if (dead.empty() || count == 0) return out;
  out.reserve(count);
  const double stride = 1.0 / static_cast<double>(count);
  double position = stride * rng.uniform();
  double cumulative = 0.0;
  std::size_t j = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const double target = position + stride * static_cast<double>(k);
    while (j + 1 < dead.size() && cumulative + std::exp(dead[j].log_weight) < target) {
      cumulative += std::exp(dead[j].log_weight);
      ++j;
    }
    out.push_back(static_cast<const LivePoint&>(dead[j]));
  }
  return out;
}

}  // namespace

EngineState initialize(const ModelSpec& model, int n_live, RandomSource& rng,
                       bool with_derived) {
  if (n_live < 2)
    throw std::invalid_argument("initialize: n_live must be at least 2");
  EngineState state;
  state.live.reserve(static_cast<std::size_t>(n_live));
  for (int i = 0; i < n_live; ++i) {
    std::vector<double> cube(model.dim);
    for (auto& x : cube) x = rng.uniform();
    state.live.push_back(make_live_point(model, std::move(cube), with_derived, neg_inf));
    ++state.n_eval;
  }
  return state;
}

void step(EngineState& state, const ModelSpec& model, const RunConfig& config,
          ReplacementSampler& sampler, RandomSource& rng) {
  const auto n_live = state.live.size();
  const double log_t = std::log(static_cast<double>(n_live) /
                                static_cast<double>(n_live + 1));

  const std::size_t worst = worst_live_index(state.live);
  const double log_l_star = state.live[worst].log_like;

  for (std::size_t i = 0; i < n_live; ++i)
    if (i != worst && state.live[i].log_like == log_l_star) {
      ++state.plateau_flags;
      break;
    }

  // dX_i = X_{i-1} - X_i = t^{i-1} (1 - t), with 1 - t = 1/(n_live + 1)
  const std::uint64_t i_next = state.iteration + 1;
  const double log_dx = static_cast<double>(i_next - 1) * log_t -
                        std::log(static_cast<double>(n_live + 1));
  const double log_l_weight =
      config.trapezoid_weights
          ? log_add_exp(log_l_star, state.prev_log_l_star) - std::log(2.0)
          : log_l_star;

  DeadPoint dead;
  static_cast<LivePoint&>(dead) = state.live[worst];
  dead.log_weight = log_l_weight + log_dx;
  state.dead.push_back(std::move(dead));
  accumulate_evidence(state, state.dead.back().log_weight, log_l_star);

  // Survivors: swap the evicted point to the back and expose the rest.
  std::swap(state.live[worst], state.live[n_live - 1]);
  std::span<const LivePoint> survivors(state.live.data(), n_live - 1);

  SliceChainStats stats;
  LivePoint replacement;
  try {
    replacement = sampler.generate(model, survivors, log_l_star, rng,
                                   config.compute_derived, stats);
  } catch (const SamplerStall& e) {
    throw SamplerStall(std::string(e.what()) + " (iteration " +
                       std::to_string(i_next) + ", log Z so far " +
                       std::to_string(state.log_z) + ")");
  }
  state.n_eval += stats.n_eval;

  int insertion_index = 0;
  for (const auto& pt : survivors)
    if (pt.log_like < replacement.log_like) ++insertion_index;
  state.insertion_indexes.push_back(insertion_index);

  state.live[n_live - 1] = std::move(replacement);
  state.prev_log_l_star = log_l_star;
  state.iteration = i_next;
  state.log_x = static_cast<double>(i_next) * log_t;
}

double remaining_log_evidence(const EngineState& state) {
  std::vector<double> log_likes;
  log_likes.reserve(state.live.size());
  for (const auto& pt : state.live) log_likes.push_back(pt.log_like);
  const double log_mean =
      log_sum_exp(log_likes) - std::log(static_cast<double>(state.live.size()));
  return log_mean + state.log_x;
}

bool should_stop(const EngineState& state, double epsilon) {
  if (state.log_z == neg_inf) return false;
  return std::exp(remaining_log_evidence(state) - state.log_z) < epsilon;
}

RunResult finalize(EngineState state, const ModelSpec& model,
                   const RunConfig& config, RandomSource& rng) {
  const auto n_live = state.live.size();

  // Remaining live points enter with equal shares of the leftover volume.
  std::stable_sort(state.live.begin(), state.live.end(),
                   [](const LivePoint& a, const LivePoint& b) {
                     return a.log_like < b.log_like;
                   });
  const double log_share =
      state.log_x - std::log(static_cast<double>(n_live));
  for (auto& pt : state.live) {
    DeadPoint dead;
    static_cast<LivePoint&>(dead) = std::move(pt);
    dead.log_weight = dead.log_like + log_share;
    state.dead.push_back(std::move(dead));
    accumulate_evidence(state, state.dead.back().log_weight,
                        state.dead.back().log_like);
  }
  state.live.clear();

  RunResult result;
  result.n_live = static_cast<int>(n_live);
  result.log_z = state.log_z;
  result.n_eval = state.n_eval;
  result.plateau_flags = state.plateau_flags;
  result.insertion_indexes = state.insertion_indexes;

  // Normalize weights so exp sums to one.
  result.dead = std::move(state.dead);
  for (auto& pt : result.dead) pt.log_weight -= result.log_z;

  std::vector<double> weights;
  weights.reserve(result.dead.size());
  for (const auto& pt : result.dead) weights.push_back(std::exp(pt.log_weight));

  result.stats = summary_stats(result.dead, result.log_z);
  result.log_z_err =
      std::sqrt(std::max(result.stats.d_kl, 0.0) / static_cast<double>(n_live));
  result.ess =
      std::min(kish_ess(weights), static_cast<double>(result.dead.size()));

  if (!result.insertion_indexes.empty()) {
    InsertionRecord record{result.insertion_indexes, static_cast<int>(n_live), 0};
    result.insertion_report = insertion_test(record);
    result.ks_p = result.insertion_report.p_value;
  }

  const auto n_posterior =
      static_cast<std::size_t>(std::max(1.0, std::round(result.ess)));
  result.posterior_samples = resample_posterior(result.dead, n_posterior, rng);

  // Prior samples are an independent set of fresh hypercube draws.
  result.prior_samples.reserve(n_live);
  for (std::size_t i = 0; i < n_live; ++i) {
    std::vector<double> cube(model.dim);
    for (auto& x : cube) x = rng.uniform();
    result.prior_samples.push_back(
        make_live_point(model, std::move(cube), config.compute_derived, neg_inf));
    ++result.n_eval;
  }

  if (result.plateau_flags > 0)
    result.warnings.push_back(
        "detected " + std::to_string(result.plateau_flags) +
        " tied evictions: likelihood plateaus may spoil evidence estimates");
  return result;
}

RunResult run(const ModelSpec& model, const RunConfig& config) {
  const int interval = config.whitening_interval > 0 ? config.whitening_interval
                                                     : std::max(1, config.n_live / 2);
  SliceSampler sampler(config.n_repeat, config.slice, interval);
  return run(model, config, sampler);
}

RunResult run(const ModelSpec& model, const RunConfig& config,
              ReplacementSampler& sampler) {
  RandomSource rng(config.sampler_seed);
  std::ostream& feedback =
      config.feedback_stream ? *config.feedback_stream : std::cerr;

  EngineState state = initialize(model, config.n_live, rng, config.compute_derived);
  const std::uint64_t cap = iteration_cap(config);
  bool truncated = false;

  while (!should_stop(state, config.precision)) {
    if (state.iteration >= cap) {
      truncated = true;
      break;
    }
    step(state, model, config, sampler, rng);
    if (config.feedback && state.iteration % state.live.size() == 0) {
      feedback << "iteration " << state.iteration << ": log Z = " << state.log_z
               << ", log L* = " << state.prev_log_l_star
               << ", remaining log dZ = " << remaining_log_evidence(state)
               << "\n";
    }
  }

  RunResult result = finalize(std::move(state), model, config, rng);
  result.truncated = truncated;
  if (truncated)
    result.warnings.push_back(
        "iteration cap of " + std::to_string(cap) +
        " reached before the precision criterion; evidence is truncated");
  return result;
}

}  // namespace polyns
