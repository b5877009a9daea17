#include <doctest.h>

#include <cmath>

#include "polyns/benchmarks.hpp"
#include "polyns/errors.hpp"
#include "support/oracles.hpp"

using namespace polyns;

namespace {

double log_like_at(const ModelSpec& model, const std::vector<double>& params) {
  return model.log_likelihood(params);
}

}  // namespace

TEST_CASE("every catalog entry passes validate_model") {
  for (const auto& entry : benchmark_catalog()) {
    INFO(entry.name);
    Dataset data;
    if (!entry.builtin_data.empty())
      data = Dataset::from_text(entry.builtin_data, "<builtin>");
    const auto model = entry.make(data, 1);
    const auto report = validate_model(model);
    for (const auto& line : report) INFO(line);
    CHECK(report.empty());
  }
}

TEST_CASE("bernoulli: likelihood values and limits") {
  const auto data = Dataset::from_text(
      R"({"N": 10, "y": [0, 1, 0, 0, 0, 0, 0, 0, 0, 1]})", "test");
  const auto model = bernoulli_model(data, 3);
  CHECK(log_like_at(model, {0.5}) ==
        doctest::Approx(-10.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(log_like_at(model, {0.0}) == neg_inf);  // k > 0 successes at theta = 0
  CHECK(log_like_at(model, {1.0}) == neg_inf);

  // derived: logit(theta) and a simulated observation in {0, 1}
  const auto derived = model.derived(std::vector<double>{0.25});
  CHECK(derived[0] == doctest::Approx(std::log(0.25 / 0.75)).epsilon(1e-12));
  CHECK((derived[1] == 0.0 || derived[1] == 1.0));

  CHECK_THROWS_AS(
      bernoulli_model(Dataset::from_text(R"({"N": 3, "y": [0, 2, 0]})", "t"), 1),
      DataError);
  CHECK_THROWS_AS(
      bernoulli_model(Dataset::from_text(R"({"N": 4, "y": [0, 1]})", "t"), 1),
      DataError);
}

TEST_CASE("bernoulli: analytic evidence identity ln B(k+1, n-k+1)") {
  CHECK(oracles::bernoulli_log_evidence(2, 10) ==
        doctest::Approx(-6.2047).epsilon(2e-5));
}

TEST_CASE("eggbox values") {
  const auto model = eggbox_model(10);
  CHECK(model.dim == 10);
  // one cosine factor zero -> log L = -2^5
  CHECK(log_like_at(model, std::vector<double>(10, M_PI)) ==
        doctest::Approx(-32.0).epsilon(1e-12));
  // all factors one -> log L = -3^5
  CHECK(log_like_at(model, std::vector<double>(10, 0.0)) ==
        doctest::Approx(-243.0).epsilon(1e-12));
  // product of cosines = -1 -> the global maximum -1
  std::vector<double> peak(10, 0.0);
  peak[0] = 2.0 * M_PI;  // cos(pi) = -1
  CHECK(log_like_at(model, peak) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("himmelblau values") {
  const auto model = himmelblau_model();
  CHECK(log_like_at(model, {3.0, 2.0}) == doctest::Approx(0.0));
  CHECK(log_like_at(model, {0.0, 0.0}) == doctest::Approx(-170.0));
}

TEST_CASE("rastrigin values and global bound") {
  const auto model2 = rastrigin_model(2);
  CHECK(log_like_at(model2, {0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(log_like_at(model2, {0.5, 0.5}) == doctest::Approx(-40.5).epsilon(1e-12));
  for (double a : {-5.0, -1.3, 0.7, 4.9})
    for (double b : {-4.4, 0.0, 2.2})
      CHECK(log_like_at(model2, {a, b}) <= 1e-12);
}

TEST_CASE("rosenbrock values and global bound") {
  const auto model = rosenbrock_model(4);
  CHECK(log_like_at(model, {1.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.0));
  CHECK(log_like_at(model, {0.0, 0.0, 0.0, 0.0}) == doctest::Approx(-3.0));
  for (double a : {-5.0, 0.5, 9.0})
    CHECK(log_like_at(model, {a, a, a, a}) <= 1e-12);
  CHECK_THROWS_AS(rosenbrock_model(1), std::invalid_argument);
}

TEST_CASE("gaussian shell values") {
  const auto model = gaussian_shell_model(5, 0.25, 0.01);
  std::vector<double> on_shell(5, std::sqrt(0.25 / 5.0));
  CHECK(log_like_at(model, on_shell) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(log_like_at(model, std::vector<double>(5, 0.0)) ==
        doctest::Approx(-312.5).epsilon(1e-12));
}

TEST_CASE("slab & spike value at the origin") {
  const auto model = slab_spike_model(50.0, 0.01);
  const double expected =
      1.0 / (std::sqrt(2.0 * M_PI) * 50.0) + 1.0 / (std::sqrt(2.0 * M_PI) * 0.01);
  CHECK(std::exp(log_like_at(model, {0.0})) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(39.902).epsilon(1e-4));
  // deep in the tail the log-likelihood is very negative but finite
  const double tail = log_like_at(model, {100.0});
  CHECK(tail < -5.0);
  CHECK(std::isfinite(tail));
}

TEST_CASE("disaster: per-year Poisson terms") {
  const auto data = Dataset::from_text(
      R"({"year": [1851, 1852], "count": [0, 2]})", "test");
  const auto model = disaster_model(data);

  // change year 1851: both years use the late rate
  // rate 1, count 0 -> term -1; rate 1, count 2 -> -1 - ln 2
  const double ll = log_like_at(model, {5.0, 1.0, 1851.0});
  CHECK(ll == doctest::Approx(-1.0 + (-1.0 - std::log(2.0))).epsilon(1e-12));

  // change year 1852: first year early at rate 2, second late at rate 1
  const double ll2 = log_like_at(model, {2.0, 1.0, 1852.0});
  CHECK(ll2 == doctest::Approx(-2.0 + (-1.0 - std::log(2.0))).epsilon(1e-12));

  CHECK_THROWS_AS(disaster_model(Dataset::from_text(
                      R"({"year": [1851, 1853], "count": [0, 1]})", "t")),
                  DataError);
  CHECK_THROWS_AS(disaster_model(Dataset::from_text(
                      R"({"year": [1851, 1852], "count": [0, -1]})", "t")),
                  DataError);
}

TEST_CASE("disaster: builtin dataset spans 1851-1962") {
  const auto* info = find_benchmark("disaster");
  REQUIRE(info != nullptr);
  const auto data = Dataset::from_text(info->builtin_data, "<builtin>");
  const auto years = data.get_int_array("year");
  const auto counts = data.get_int_array("count");
  CHECK(years.size() == 112);
  CHECK(counts.size() == 112);
  CHECK(years.front() == 1851);
  CHECK(years.back() == 1962);
  const auto model = disaster_model(data);
  CHECK(model.dim == 3);
  CHECK(model.derived_names == std::vector<std::string>{"change_year"});
}
