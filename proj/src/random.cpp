#include "polyns/random.hpp"

#include "polyns/prior_transforms.hpp"

namespace polyns {

double RandomSource::normal() { return inverse_normal_cdf(uniform_open()); }

std::uint64_t entropy_seed() {
  std::random_device rd;
  // keep within int64 range so recorded seeds stay valid TOML integers
  return ((static_cast<std::uint64_t>(rd()) << 32) ^ rd()) >> 1;
}

}  // namespace polyns
