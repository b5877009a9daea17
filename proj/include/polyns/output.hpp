#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "polyns/engine.hpp"
#include "polyns/manifest.hpp"

namespace polyns {

struct OutputPaths {
  std::string json_file;
  std::string chain_dir;
  std::string manifest_file;
};

/// Chain directory after applying the NS_CHAIN_DIR environment override.
std::string chain_directory(const CliInvocation& invocation);

/// Wall-clock stamp, overridable through POLYNS_CREATED_AT for
/// reproducibility tests.
std::string timestamp_now();

/// The run summary document. Non-finite reals are serialized as the strings
/// "-inf"/"inf" so the JSON stays strictly parseable.
nlohmann::json summary_json(const RunResult& result,
                            const CliInvocation& invocation,
                            const ModelSpec& model,
                            const std::string& created_at);

void write_summary(const RunResult& result, const CliInvocation& invocation,
                   const ModelSpec& model, const std::string& path);

/// Text chain files named after the model, 17 significant digits per value:
///   <model>_dead-birth.txt     params, derived, log_like, birth_log_like
///   <model>_equal_weights.txt  params, log_like
void write_chains(const RunResult& result, const std::string& dir,
                  const std::string& model_name);

/// End-of-run block: evidence, insertion-test p-value, effective sample
/// size, evaluation count, output locations, warnings.
void print_feedback(std::ostream& channel, const RunResult& result,
                    const OutputPaths& paths, bool no_write);

}  // namespace polyns
