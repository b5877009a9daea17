#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyns {

/// Fully resolved run settings: everything needed to replay a run. Seeds are
/// always concrete values (entropy is resolved at parse time and recorded);
/// num_repeats stays empty until the model dimension is known, and the
/// manifest on disk always carries the resolved value.
struct CliInvocation {
  std::string model_name;

  // sampler group
  int nlive = 500;
  std::optional<int> num_repeats;  // default: 5 per model dimension
  double precision = 1e-3;
  std::uint64_t sampler_seed = 0;
  bool no_feedback = false;
  bool no_write = false;
  bool no_derived = false;

  // random group (model-side generated quantities)
  std::uint64_t model_seed = 0;

  // data group
  std::string data_file;  // empty: the model's built-in dataset

  // output group
  std::string json_file;  // resolved to "<model>.json" when empty at parse
  std::string chain_dir = "chains";

  bool operator==(const CliInvocation&) const = default;
};

/// One table per subcommand group, human readable, round-trip exact.
std::string manifest_to_string(const CliInvocation& invocation,
                               std::span<const std::string> override_notes = {});
CliInvocation manifest_from_string(const std::string& text,
                                   const std::string& origin);

void write_manifest(const CliInvocation& invocation, const std::string& path,
                    std::span<const std::string> override_notes = {});
CliInvocation read_manifest(const std::string& path);

}  // namespace polyns
