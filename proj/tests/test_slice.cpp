#include <doctest.h>

#include <atomic>
#include <cmath>

#include "polyns/errors.hpp"
#include "polyns/slice.hpp"
#include "support/oracles.hpp"

using namespace polyns;

namespace {

ModelSpec plain_model(std::size_t dim,
                      std::function<double(std::span<const double>)> log_like) {
  ModelSpec model;
  model.dim = dim;
  for (std::size_t i = 0; i < dim; ++i)
    model.param_names.push_back("p" + std::to_string(i));
  model.prior_transform = [](std::span<const double> cube) {
    return std::vector<double>(cube.begin(), cube.end());
  };
  model.log_likelihood = std::move(log_like);
  return model;
}

LivePoint point_at(const ModelSpec& model, std::vector<double> cube) {
  return make_live_point(model, std::move(cube), false, neg_inf);
}

}  // namespace

TEST_CASE("slice_step: flat likelihood accepts uniformly over the cube") {
  const auto model = plain_model(1, [](std::span<const double>) { return 0.0; });
  const auto identity = WhiteningTransform::identity(1);
  const std::vector<double> direction{1.0};
  SliceConfig cfg;
  cfg.width = 0.3;

  std::vector<double> accepted;
  for (int rep = 0; rep < 10000; ++rep) {
    RandomSource rng(static_cast<std::uint64_t>(rep) + 1);
    SliceChainStats stats;
    const auto start = point_at(model, {0.5});
    const auto out = slice_step(model, start, direction, identity, neg_inf, rng,
                                cfg, stats);
    accepted.push_back(out.cube[0]);
  }
  // With L* = -inf the slice is the whole cube segment: step-out expands the
  // bracket past both edges, so acceptances are uniform on [0,1].
  CHECK(oracles::ks_uniform_p(accepted) > 0.01);
}

TEST_CASE("slice_step: interval indicator constrains every acceptance") {
  const auto model = plain_model(1, [](std::span<const double> p) {
    return (p[0] >= 0.4 && p[0] <= 0.6) ? 0.0 : neg_inf;
  });
  const auto identity = WhiteningTransform::identity(1);
  RandomSource rng(42);
  SliceConfig cfg;
  auto current = point_at(model, {0.5});
  for (int i = 0; i < 500; ++i) {
    SliceChainStats stats;
    current = slice_step(model, current, std::vector<double>{1.0}, identity,
                         -1.0, rng, cfg, stats);
    CHECK(current.cube[0] >= 0.4);
    CHECK(current.cube[0] <= 0.6);
    CHECK(current.log_like > -1.0);
  }
}

TEST_CASE("slice_step: unsatisfiable constraint stalls instead of spinning") {
  const auto model = plain_model(1, [](std::span<const double>) { return 0.0; });
  const auto identity = WhiteningTransform::identity(1);
  RandomSource rng(7);
  SliceChainStats stats;
  const auto start = point_at(model, {0.5});
  // log L* equals the flat level; the strict inequality can never hold.
  CHECK_THROWS_AS(slice_step(model, start, std::vector<double>{1.0}, identity,
                             0.0, rng, SliceConfig{}, stats),
                  SamplerStall);
}

TEST_CASE("generate_replacement: flat likelihood reproduces the prior") {
  const auto model = plain_model(2, [](std::span<const double>) { return 1.5; });
  std::vector<LivePoint> live;
  RandomSource init_rng(5);
  for (int i = 0; i < 50; ++i)
    live.push_back(point_at(model, {init_rng.uniform(), init_rng.uniform()}));
  const auto whitening = [&] {
    std::vector<std::vector<double>> cubes;
    for (const auto& pt : live) cubes.push_back(pt.cube);
    return build_whitening(cubes);
  }();

  std::vector<double> first_axis, second_axis;
  for (int rep = 0; rep < 4000; ++rep) {
    RandomSource rng(1000 + static_cast<std::uint64_t>(rep));
    SliceChainStats stats;
    const auto out = generate_replacement(model, live, neg_inf, 3, rng,
                                          whitening, SliceConfig{}, false, stats);
    first_axis.push_back(out.cube[0]);
    second_axis.push_back(out.cube[1]);
    CHECK(stats.n_eval >= 3);  // at least one evaluation per slice step
  }
  CHECK(oracles::ks_uniform_p(first_axis) > 0.01);
  CHECK(oracles::ks_uniform_p(second_axis) > 0.01);
}

TEST_CASE("generate_replacement: hard constraint always satisfied") {
  // 2-D Gaussian bump; L* at its half-height contour.
  const auto model = plain_model(2, [](std::span<const double> p) {
    const double dx = p[0] - 0.5, dy = p[1] - 0.5;
    return -(dx * dx + dy * dy) / (2.0 * 0.05 * 0.05);
  });
  const double log_l_star = -5.0;
  RandomSource rng(99);
  std::vector<LivePoint> live;
  while (live.size() < 40) {  // rejection-sample the constrained region
    auto pt = point_at(model, {rng.uniform(), rng.uniform()});
    if (pt.log_like > log_l_star) live.push_back(std::move(pt));
  }
  std::vector<std::vector<double>> cubes;
  for (const auto& pt : live) cubes.push_back(pt.cube);
  const auto whitening = build_whitening(cubes);

  for (int rep = 0; rep < 300; ++rep) {
    SliceChainStats stats;
    const auto out = generate_replacement(model, live, log_l_star, 4, rng,
                                          whitening, SliceConfig{}, false, stats);
    CHECK(out.log_like > log_l_star);
    CHECK(out.birth_log_like == log_l_star);
  }
}

TEST_CASE("generate_replacement: evaluation accounting matches the model") {
  auto model = plain_model(2, nullptr);
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  model.log_likelihood = [counter](std::span<const double>) {
    counter->fetch_add(1);
    return 0.0;
  };
  std::vector<LivePoint> live;
  RandomSource rng(3);
  for (int i = 0; i < 30; ++i)
    live.push_back(point_at(model, {rng.uniform(), rng.uniform()}));
  std::vector<std::vector<double>> cubes;
  for (const auto& pt : live) cubes.push_back(pt.cube);
  const auto whitening = build_whitening(cubes);

  counter->store(0);
  SliceChainStats stats;
  generate_replacement(model, live, neg_inf, 5, rng, whitening, SliceConfig{},
                       false, stats);
  CHECK(stats.n_eval == counter->load());

  CHECK_THROWS_AS(generate_replacement(model, std::span<const LivePoint>{},
                                       neg_inf, 5, rng, whitening, SliceConfig{},
                                       false, stats),
                  ContractViolation);
}

TEST_CASE("whitening invariance under an exact power-of-two rescaling") {
  // y = x/2 maps the run into the lower-left subcube. All arithmetic in the
  // whitening build and the slice proposals scales exactly by powers of two,
  // so the accepted chains must match bit for bit under a shared RNG stream.
  const double scale = 0.5;
  const auto base_like = [](double a, double b) {
    const double dx = a - 0.5, dy = b - 0.25;
    return -(dx * dx + dy * dy) / (2.0 * 0.03 * 0.03);
  };
  const auto model_x = plain_model(2, [base_like](std::span<const double> p) {
    return base_like(p[0], p[1]);
  });
  const auto model_y = plain_model(2, [base_like, scale](std::span<const double> p) {
    return base_like(p[0] / scale, p[1] / scale);
  });

  RandomSource live_rng(11);
  std::vector<LivePoint> live_x, live_y;
  while (live_x.size() < 60) {
    const double a = 0.5 + 0.06 * (live_rng.uniform() - 0.5);
    const double b = 0.25 + 0.06 * (live_rng.uniform() - 0.5);
    auto px = point_at(model_x, {a, b});
    if (px.log_like <= -2.0) continue;
    live_x.push_back(std::move(px));
    live_y.push_back(point_at(model_y, {a * scale, b * scale}));
  }
  std::vector<std::vector<double>> cubes_x, cubes_y;
  for (const auto& pt : live_x) cubes_x.push_back(pt.cube);
  for (const auto& pt : live_y) cubes_y.push_back(pt.cube);
  const auto whitening_x = build_whitening(cubes_x);
  const auto whitening_y = build_whitening(cubes_y);

  RandomSource rng_x(2024), rng_y(2024);
  SliceChainStats stats_x, stats_y;
  const double log_l_star = -2.0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto out_x = generate_replacement(model_x, live_x, log_l_star, 3,
                                            rng_x, whitening_x, SliceConfig{},
                                            false, stats_x);
    const auto out_y = generate_replacement(model_y, live_y, log_l_star, 3,
                                            rng_y, whitening_y, SliceConfig{},
                                            false, stats_y);
    REQUIRE(out_x.cube.size() == out_y.cube.size());
    for (std::size_t d = 0; d < out_x.cube.size(); ++d)
      CHECK(out_y.cube[d] == out_x.cube[d] * scale);
  }
}
