#include "polyns/model.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "polyns/errors.hpp"

namespace polyns {

namespace {

std::string format_vector(std::span<const double> v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

Evaluation evaluate(const ModelSpec& model, std::span<const double> cube,
                    bool with_derived) {
  if (cube.size() != model.dim)
    throw ContractViolation("evaluate: cube has length " +
                            std::to_string(cube.size()) + ", model dimension is " +
                            std::to_string(model.dim));
  for (double x : cube) {
    if (!(x >= 0.0 && x <= 1.0))
      throw ContractViolation(
          "evaluate: hypercube coordinate outside [0,1] at cube=" +
          format_vector(cube));
  }

  Evaluation out;
  out.params = model.prior_transform(cube);
  if (out.params.size() != model.param_names.size())
    throw ContractViolation(
        "evaluate: prior_transform returned " + std::to_string(out.params.size()) +
        " values but " + std::to_string(model.param_names.size()) +
        " parameters are named");
  for (double p : out.params) {
    if (std::isnan(p))
      throw ContractViolation("evaluate: prior_transform produced NaN at cube=" +
                              format_vector(cube));
  }

  out.log_like = model.log_likelihood(out.params);
  if (std::isnan(out.log_like) || out.log_like == pos_inf)
    throw ContractViolation(
        "evaluate: log-likelihood is not an extended real (NaN or +inf) at params=" +
        format_vector(out.params));

  if (with_derived && model.derived) {
    out.derived = model.derived(out.params);
    if (out.derived.size() != model.derived_names.size())
      throw ContractViolation(
          "evaluate: derived map returned " + std::to_string(out.derived.size()) +
          " values but " + std::to_string(model.derived_names.size()) +
          " derived quantities are named");
  }
  return out;
}

LivePoint make_live_point(const ModelSpec& model, std::vector<double> cube,
                          bool with_derived, double birth_log_like) {
  Evaluation ev = evaluate(model, cube, with_derived);
  LivePoint pt;
  pt.cube = std::move(cube);
  pt.params = std::move(ev.params);
  pt.derived = std::move(ev.derived);
  pt.log_like = ev.log_like;
  pt.birth_log_like = birth_log_like;
  return pt;
}

std::vector<std::string> validate_model(const ModelSpec& model) {
  std::vector<std::string> report;
  if (model.dim == 0) {
    report.push_back("model dimension is zero");
    return report;
  }
  if (!model.prior_transform || !model.log_likelihood) {
    report.push_back("prior_transform or log_likelihood is missing");
    return report;
  }

  // Probe points: the center plus near-corner points. Corners are inset so
  // that priors with unbounded support do not trip their endpoint errors.
  const double inset = 1e-7;
  std::vector<std::vector<double>> probes;
  probes.emplace_back(model.dim, 0.5);
  const std::size_t n_corners = model.dim < 5 ? (std::size_t{1} << model.dim) : 16;
  for (std::size_t mask = 0; mask < n_corners; ++mask) {
    std::vector<double> corner(model.dim, inset);
    for (std::size_t d = 0; d < model.dim; ++d)
      if ((mask >> (d % 16)) & 1) corner[d] = 1.0 - inset;
    probes.push_back(std::move(corner));
  }

  for (const auto& cube : probes) {
    try {
      auto params = model.prior_transform(cube);
      if (params.size() != model.param_names.size())
        report.push_back("dimension mismatch: transform returned " +
                         std::to_string(params.size()) + " values, " +
                         std::to_string(model.param_names.size()) +
                         " parameters are named (cube=" + format_vector(cube) + ")");
      bool nan_param = false;
      for (double p : params) nan_param = nan_param || std::isnan(p);
      if (nan_param)
        report.push_back("NaN from prior_transform at cube=" + format_vector(cube));

      auto params2 = model.prior_transform(cube);
      if (params2 != params)
        report.push_back("prior_transform is not deterministic at cube=" +
                         format_vector(cube));

      if (!nan_param && params.size() == model.param_names.size()) {
        const double ll = model.log_likelihood(params);
        if (std::isnan(ll))
          report.push_back("NaN log-likelihood at params=" + format_vector(params));
        else if (ll == pos_inf)
          report.push_back("+inf log-likelihood at params=" + format_vector(params));
        else if (model.log_likelihood(params) != ll)
          report.push_back("log_likelihood is not deterministic at params=" +
                           format_vector(params));
        if (model.derived) {
          auto der = model.derived(params);
          if (der.size() != model.derived_names.size())
            report.push_back("dimension mismatch: derived returned " +
                             std::to_string(der.size()) + " values, " +
                             std::to_string(model.derived_names.size()) +
                             " derived quantities are named");
        }
      }
    } catch (const std::exception& e) {
      report.push_back(std::string("probe at cube=") + format_vector(cube) +
                       " raised: " + e.what());
    }
  }
  return report;
}

}  // namespace polyns
