#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace polyns {

/// Deterministic random source for the engine and samplers. A thin wrapper
/// over mt19937_64 with explicit draw helpers, so seeded runs do not depend
/// on standard-library distribution internals.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on the open interval (0, 1); safe input for inverse CDFs.
  double uniform_open() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal draw via the inverse CDF.
  double normal();

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// Non-deterministic seed for when the user did not supply one.
std::uint64_t entropy_seed();

}  // namespace polyns
