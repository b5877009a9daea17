#pragma once

#include <stdexcept>
#include <string>

namespace polyns {

/// Bad command line (exit code 1 from the CLI).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or malformed input data (exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model broke the evaluation contract: hypercube coordinate outside
/// [0,1], NaN or +inf from the likelihood, dimension mismatch (exit code 3).
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The constrained sampler could not make progress (exit code 4).
class SamplerStall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyns
