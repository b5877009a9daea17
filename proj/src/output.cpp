#include "polyns/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "polyns/io_util.hpp"
#include "polyns/version.hpp"

namespace polyns {

namespace {

nlohmann::json json_real(double v) {
  if (std::isnan(v)) return "nan";
  if (v == pos_inf) return "inf";
  if (v == neg_inf) return "-inf";
  return v;
}

nlohmann::json sample_group(const std::vector<LivePoint>& samples,
                            const ModelSpec& model, bool with_derived) {
  nlohmann::json group = nlohmann::json::object();
  for (std::size_t p = 0; p < model.param_names.size(); ++p) {
    nlohmann::json column = nlohmann::json::array();
    for (const auto& s : samples) column.push_back(json_real(s.params[p]));
    group[model.param_names[p]] = std::move(column);
  }
  if (with_derived) {
    for (std::size_t d = 0; d < model.derived_names.size(); ++d) {
      nlohmann::json column = nlohmann::json::array();
      for (const auto& s : samples)
        column.push_back(d < s.derived.size() ? json_real(s.derived[d])
                                              : nlohmann::json("-inf"));
      group[model.derived_names[d]] = std::move(column);
    }
  }
  nlohmann::json log_like = nlohmann::json::array();
  for (const auto& s : samples) log_like.push_back(json_real(s.log_like));
  group["log_likelihood"] = std::move(log_like);
  return group;
}

void append_value(std::string& row, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  if (!row.empty()) row.push_back(' ');
  row += buf;
}

}  // namespace

std::string chain_directory(const CliInvocation& invocation) {
  if (const char* env = std::getenv("NS_CHAIN_DIR"); env != nullptr && *env != '\0')
    return env;
  return invocation.chain_dir;
}

std::string timestamp_now() {
  if (const char* fixed = std::getenv("POLYNS_CREATED_AT");
      fixed != nullptr && *fixed != '\0')
    return fixed;
  const std::time_t now = std::time(nullptr);
  char buf[64];
  std::tm tm_buf{};
  localtime_r(&now, &tm_buf);
  std::strftime(buf, sizeof(buf), "%a %b %e %H:%M:%S %Y", &tm_buf);
  return buf;
}

nlohmann::json summary_json(const RunResult& result,
                            const CliInvocation& invocation,
                            const ModelSpec& model,
                            const std::string& created_at) {
  nlohmann::json doc;

  nlohmann::json attrs;
  attrs["name"] = invocation.model_name;
  attrs["created_at"] = created_at;
  attrs["inference_library"] = library_name;
  attrs["inference_library_version"] = library_version;
  attrs["creation_library"] = library_name;
  attrs["creation_library_version"] = library_version;
  attrs["creation_library_language"] = "C++";
  attrs[library_name] = {
      {"model name", invocation.model_name},
      {"data file", invocation.data_file.empty() ? "<builtin>" : invocation.data_file},
      {"toml file", std::filesystem::path(invocation.json_file)
                        .replace_extension(".toml")
                        .string()},
      {"build info", build_info()},
      {"seed", invocation.model_seed},
  };
  attrs["sampler"] = {
      {"nlive", invocation.nlive},
      {"num_repeats", invocation.num_repeats ? *invocation.num_repeats : 0},
      {"precision_criterion", invocation.precision},
      {"seed", invocation.sampler_seed},
  };
  doc["posterior_attrs"] = std::move(attrs);

  nlohmann::json stats;
  stats["test"] = {
      {"metadata", "This is a test of uniformity of insertion indexes of live points"},
      {"p-value", json_real(result.ks_p)},
      {"batch size / n_live", result.insertion_report.batch_ratio},
      {"batch-corrected min p-value", json_real(result.insertion_report.per_batch_min_p)},
  };
  stats["ess"] = {
      {"metadata", "Estimate of effective sample size"},
      {"n", static_cast<long long>(std::llround(result.ess))},
  };
  stats["evidence"] = {
      {"metadata", "The evidence is log-normally distributed"},
      {"log evidence", json_real(result.log_z)},
      {"error log evidence", json_real(result.log_z_err)},
  };
  stats["neval"] = {
      {"metadata", "Total number of likelihood evaluations"},
      {"neval", result.n_eval},
  };
  doc["sample_stats"] = std::move(stats);

  const bool with_derived = !invocation.no_derived;
  doc["posterior"] = sample_group(result.posterior_samples, model, with_derived);
  doc["prior"] = sample_group(result.prior_samples, model, with_derived);
  doc["warnings"] = result.warnings;
  return doc;
}

void write_summary(const RunResult& result, const CliInvocation& invocation,
                   const ModelSpec& model, const std::string& path) {
  const nlohmann::json doc =
      summary_json(result, invocation, model, timestamp_now());
  write_text_atomic(path, doc.dump(4) + "\n");
}

void write_chains(const RunResult& result, const std::string& dir,
                  const std::string& model_name) {
  namespace fs = std::filesystem;
  const fs::path base = fs::path(dir) / model_name;

  std::string dead;
  for (const auto& pt : result.dead) {
    std::string row;
    for (double p : pt.params) append_value(row, p);
    for (double d : pt.derived) append_value(row, d);
    append_value(row, pt.log_like);
    append_value(row, pt.birth_log_like);
    dead += row;
    dead.push_back('\n');
  }
  write_text_atomic(base.string() + "_dead-birth.txt", dead);

  std::string equal;
  for (const auto& pt : result.posterior_samples) {
    std::string row;
    for (double p : pt.params) append_value(row, p);
    append_value(row, pt.log_like);
    equal += row;
    equal.push_back('\n');
  }
  write_text_atomic(base.string() + "_equal_weights.txt", equal);
}

void print_feedback(std::ostream& channel, const RunResult& result,
                    const OutputPaths& paths, bool no_write) {
  char line[128];
  const long long ndead =
      static_cast<long long>(result.dead.size()) - result.n_live;
  channel << " ____________________________________________\n";
  std::snprintf(line, sizeof(line), "| ndead  = %lld\n", ndead);
  channel << line;
  std::snprintf(line, sizeof(line), "| log(Z) = %.5f +/- %.5f\n", result.log_z,
                result.log_z_err);
  channel << line;
  channel << "|____________________________________________\n\n";
  std::snprintf(line, sizeof(line), "| Evidence log(Z) = %g +/- %g\n",
                result.log_z, result.log_z_err);
  channel << line;
  std::snprintf(line, sizeof(line),
                "| Insertion-index test p-value = %g\n", result.ks_p);
  channel << line;
  std::snprintf(line, sizeof(line), "| Effective number of samples = %lld\n",
                static_cast<long long>(std::llround(result.ess)));
  channel << line;
  std::snprintf(line, sizeof(line), "| Likelihood evaluations = %llu\n",
                static_cast<unsigned long long>(result.n_eval));
  channel << line;
  if (!no_write) {
    channel << "| JSON summary at " << paths.json_file << "\n";
    channel << "| Run manifest at " << paths.manifest_file << "\n";
    channel << "| Chain files at " << paths.chain_dir << "/\n";
  }
  for (const auto& warning : result.warnings)
    channel << "| warning: " << warning << "\n";
}

}  // namespace polyns
