#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathmax/path_builder.hpp"
#include "pathmax/report.hpp"

namespace pathmax {

/// Exit statuses of the command-line driver.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Certificate record: {input_graph6, weights, path, f_input, f_path, strict, trace}.
/// `weights` is "ones" or the matrix as inline CSV.
template <typename Scalar>
Json certificate_to_json(const Graph& g, const std::string& weights, const PathCertificate<Scalar>& cert) {
  Json trace = Json::array();
  for (const auto& step : cert.trace) {
    Json s = {{"op", std::string(to_string(step.op))},
              {"vertices", step.vertices},
              {"order", step.order},
              {"f_before", step.f_before},
              {"f_after", step.f_after}};
    if (step.f_alternative) s["f_alternative"] = *step.f_alternative;
    trace.push_back(std::move(s));
  }
  return {{"input_graph6", encode_graph6(g)},
          {"weights", weights},
          {"path", cert.path},
          {"f_input", cert.f_input},
          {"f_path", cert.f_path},
          {"strict", cert.strict},
          {"trace", std::move(trace)}};
}

/// Inverse of certificate_to_json for the certificate part; throws on schema errors.
template <typename Scalar>
PathCertificate<Scalar> certificate_from_json(const Json& j) {
  PathCertificate<Scalar> cert;
  cert.path = j.at("path").get<std::vector<int>>();
  cert.f_input = j.at("f_input").get<Scalar>();
  cert.f_path = j.at("f_path").get<Scalar>();
  cert.strict = j.at("strict").get<bool>();
  for (const auto& s : j.at("trace")) {
    TraceStep<Scalar> step;
    const auto op = parse_trace_op(s.at("op").get<std::string>());
    if (!op) throw std::invalid_argument("certificate: unknown trace op " + s.at("op").dump());
    step.op = *op;
    step.vertices = s.at("vertices").get<std::vector<int>>();
    step.order = s.at("order").get<int>();
    step.f_before = s.at("f_before").get<Scalar>();
    step.f_after = s.at("f_after").get<Scalar>();
    if (s.contains("f_alternative")) step.f_alternative = s.at("f_alternative").get<Scalar>();
    cert.trace.push_back(std::move(step));
  }
  return cert;
}

/**
 * Runs one subcommand. Reports go to `out` (or --output), diagnostics to
 * `err`. Returns kExitPass, kExitViolations or kExitUsage.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathmax
