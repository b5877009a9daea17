#pragma once

#include <string>
#include <vector>

#include "polyns/manifest.hpp"

namespace polyns {

struct ParsedCli {
  CliInvocation invocation;
  bool version_requested = false;
  bool help_requested = false;
  std::string help_text;
  std::string from_toml;  // manifest path when --from-toml was given
  std::vector<std::string> override_notes;  // manifest keys beaten by flags
};

/// Parses the command line (without argv[0]). Subcommand groups may appear
/// in any order; "polychord" is accepted as an alias of "sampler". When
/// --from-toml is given, the manifest supplies defaults and explicit flags
/// win. Seeds left unset resolve to entropy and are recorded. Throws
/// UsageError on unknown or ill-formed arguments.
ParsedCli parse_cli(const std::vector<std::string>& args);

/// Full program pipeline: parse, build the model, run, write outputs.
/// Returns the process exit code (0 ok, 1 usage, 2 data, 3 model contract,
/// 4 sampler stall).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace polyns
