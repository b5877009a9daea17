#include "polyns/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "polyns/benchmarks.hpp"
#include "polyns/engine.hpp"
#include "polyns/errors.hpp"
#include "polyns/output.hpp"
#include "polyns/random.hpp"
#include "polyns/version.hpp"

namespace polyns {

namespace {

struct AppBindings {
  CLI::App app{"nested-sampling inference engine"};
  CLI::Option* model_name = nullptr;
  CLI::Option* from_toml = nullptr;
  CLI::Option* nlive = nullptr;
  CLI::Option* num_repeats = nullptr;
  CLI::Option* precision = nullptr;
  CLI::Option* sampler_seed = nullptr;
  CLI::Option* no_feedback = nullptr;
  CLI::Option* no_write = nullptr;
  CLI::Option* no_derived = nullptr;
  CLI::Option* model_seed = nullptr;
  CLI::Option* data_file = nullptr;
  CLI::Option* json_file = nullptr;
  CLI::Option* chain_dir = nullptr;
  int num_repeats_value = 0;  // staging for the optional field
};

void build_app(AppBindings& b, CliInvocation& inv, std::string& from_toml) {
  auto& app = b.app;
  app.name("polyns");
  app.set_version_flag("--version", std::string(library_name) + " " + library_version);

  b.model_name = app.add_option("--model-name", inv.model_name,
                                "benchmark model to run");
  b.from_toml = app.add_option("--from-toml", from_toml,
                               "load settings from a run manifest");

  auto* sampler = app.add_subcommand("sampler", "nested-sampling controls");
  sampler->alias("polychord");
  b.nlive = sampler->add_option("--nlive", inv.nlive, "number of live points");
  b.num_repeats = sampler->add_option("--num-repeats", b.num_repeats_value,
                                      "slice steps per replacement");
  b.precision = sampler->add_option("--precision", inv.precision,
                                    "stopping tolerance on dZ/Z");
  b.sampler_seed = sampler->add_option("--seed", inv.sampler_seed,
                                       "sampler random seed");
  b.no_feedback = sampler->add_flag("--no-feedback", inv.no_feedback,
                                    "suppress screen feedback");
  b.no_write = sampler->add_flag("--no-write", inv.no_write,
                                 "turn off all writing to disk");
  b.no_derived = sampler->add_flag("--no-derived", inv.no_derived,
                                   "skip derived quantities");

  auto* random = app.add_subcommand("random", "model random-number controls");
  b.model_seed = random->add_option("--seed", inv.model_seed,
                                    "model random seed (simulated draws)");

  auto* data = app.add_subcommand("data", "data block controls");
  b.data_file = data->add_option("--file", inv.data_file, "data file (JSON)");

  auto* output = app.add_subcommand("output", "output file controls");
  b.json_file = output->add_option("--json-file", inv.json_file,
                                   "summary JSON path");
  b.chain_dir = output->add_option("--chain-dir", inv.chain_dir,
                                   "directory for chain files");

  app.require_subcommand(0, 4);
}

void run_parse(AppBindings& b, const std::vector<std::string>& args,
               ParsedCli& result) {
  // CLI11 wants argv in reverse order for its vector overload.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    b.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.help_requested = true;
    result.help_text = b.app.help();
  } catch (const CLI::CallForVersion&) {
    result.version_requested = true;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
}

void validate(const CliInvocation& inv) {
  if (inv.nlive < 2) throw UsageError("--nlive must be at least 2");
  if (inv.num_repeats && *inv.num_repeats < 1)
    throw UsageError("--num-repeats must be at least 1");
  if (!(inv.precision > 0.0)) throw UsageError("--precision must be positive");
}

std::string known_models() {
  std::string names;
  for (const auto& entry : benchmark_catalog()) {
    if (!names.empty()) names += ", ";
    names += entry.name;
  }
  return names;
}

}  // namespace

ParsedCli parse_cli(const std::vector<std::string>& args) {
  ParsedCli result;

  {
    AppBindings pass1;
    CliInvocation inv;
    std::string from_toml;
    build_app(pass1, inv, from_toml);
    run_parse(pass1, args, result);
    if (result.version_requested || result.help_requested) return result;
    result.from_toml = from_toml;
    if (from_toml.empty()) {
      if (pass1.num_repeats->count() > 0)
        inv.num_repeats = pass1.num_repeats_value;
      if (pass1.sampler_seed->count() == 0) inv.sampler_seed = entropy_seed();
      if (pass1.model_seed->count() == 0) inv.model_seed = entropy_seed();
      result.invocation = inv;
      validate(result.invocation);
      return result;
    }
  }

  // Second pass: the manifest provides defaults, explicit flags override.
  CliInvocation inv = read_manifest(result.from_toml);
  std::string from_toml;
  AppBindings pass2;
  build_app(pass2, inv, from_toml);
  ParsedCli second;
  run_parse(pass2, args, second);

  const std::pair<const CLI::Option*, std::string> tracked[] = {
      {pass2.model_name, "model_name"},
      {pass2.nlive, "sampler.nlive"},
      {pass2.num_repeats, "sampler.num_repeats"},
      {pass2.precision, "sampler.precision"},
      {pass2.sampler_seed, "sampler.seed"},
      {pass2.no_feedback, "sampler.no_feedback"},
      {pass2.no_write, "sampler.no_write"},
      {pass2.no_derived, "sampler.no_derived"},
      {pass2.model_seed, "random.seed"},
      {pass2.data_file, "data.file"},
      {pass2.json_file, "output.json_file"},
      {pass2.chain_dir, "output.chain_dir"},
  };
  for (const auto& [option, name] : tracked)
    if (option->count() > 0) result.override_notes.push_back(name);
  if (pass2.num_repeats->count() > 0) inv.num_repeats = pass2.num_repeats_value;

  result.invocation = inv;
  validate(result.invocation);
  return result;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    ParsedCli parsed = parse_cli(args);
    if (parsed.version_requested) {
      out << library_name << " " << library_version << "\n";
      return 0;
    }
    if (parsed.help_requested) {
      out << parsed.help_text;
      return 0;
    }

    CliInvocation& inv = parsed.invocation;
    if (inv.model_name.empty())
      throw UsageError("no model selected; use --model-name with one of: " +
                       known_models());
    const BenchmarkInfo* info = find_benchmark(inv.model_name);
    if (info == nullptr)
      throw UsageError("unknown model \"" + inv.model_name +
                       "\"; available models: " + known_models());

    Dataset data;
    if (!inv.data_file.empty())
      data = Dataset::from_file(inv.data_file);
    else if (!info->builtin_data.empty())
      data = Dataset::from_text(info->builtin_data, "<builtin " + info->name + ">");

    ModelSpec model = info->make(data, inv.model_seed);
    if (!inv.num_repeats)
      inv.num_repeats = static_cast<int>(5 * model.dim);
    if (inv.json_file.empty()) inv.json_file = inv.model_name + ".json";

    OutputPaths paths;
    paths.json_file = inv.json_file;
    paths.chain_dir = chain_directory(inv);
    paths.manifest_file =
        std::filesystem::path(inv.json_file).replace_extension(".toml").string();

    if (!inv.no_write)
      write_manifest(inv, paths.manifest_file, parsed.override_notes);

    RunConfig config;
    config.n_live = inv.nlive;
    config.n_repeat = *inv.num_repeats;
    config.precision = inv.precision;
    config.sampler_seed = inv.sampler_seed;
    config.compute_derived = !inv.no_derived;
    config.feedback = !inv.no_feedback;
    config.feedback_stream = &err;

    const RunResult result = run(model, config);

    if (!inv.no_write) {
      write_summary(result, inv, model, paths.json_file);
      write_chains(result, paths.chain_dir, inv.model_name);
    }
    if (!inv.no_feedback) print_feedback(out, result, paths, inv.no_write);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    err << "model contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "model contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "model contract violation: " << e.what() << "\n";
    return 3;
  } catch (const SamplerStall& e) {
    err << "sampler stall: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace polyns
