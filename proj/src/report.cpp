#include "pathmax/report.hpp"

#include <string_view>

#include <fmt/format.h>

namespace pathmax {

Json to_json(const VerificationReport& r) {
  Json j;
  j["task"] = r.task;
  j["status"] = r.passed() ? "PASS" : "FAIL";
  j["config"] = r.config;
  j["universe_count"] = r.universe_count;
  j["extremal_value"] = r.extremal_value ? Json(*r.extremal_value) : Json(nullptr);
  j["extremal_graphs"] = r.extremal_graphs;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"graph6", v.graph6}, {"expected", v.expected}, {"actual", v.actual}, {"gap", v.gap},
                               {"detail", v.detail}});
  }
  j["exhibits"] = Json::array();
  for (const auto& e : r.exhibits) {
    j["exhibits"].push_back({{"graph6", e.graph6}, {"value", e.value}, {"weights", e.weights_csv}, {"note", e.note}});
  }
  j["tolerances"] = r.tolerances;
  j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["weight_class"] = r.weight_class.empty() ? Json(nullptr) : Json(r.weight_class);
  j["version"] = kLibraryVersion;
  return j;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string scalar_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
  std::string out = "task,kind,graph6,value,expected,gap,note\n";
  const std::string extremal = r.extremal_value ? fmt::format("{}", *r.extremal_value) : "";
  for (const auto& g : r.extremal_graphs) out += fmt::format("{},extremal,{},{},,,\n", r.task, csv_field(g), extremal);
  for (const auto& v : r.violations) {
    out += fmt::format("{},violation,{},{},{},{},{}\n", r.task, csv_field(v.graph6), csv_field(scalar_text(v.actual)),
                       csv_field(scalar_text(v.expected)), v.gap, csv_field(v.detail));
  }
  for (const auto& e : r.exhibits) {
    out += fmt::format("{},exhibit,{},{},,,{}\n", r.task, csv_field(e.graph6), csv_field(scalar_text(e.value)), csv_field(e.note));
  }
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::string out = fmt::format("{}: {}\n", r.task, r.passed() ? "PASS" : "FAIL");
  out += fmt::format("  universe scanned: {}\n", r.universe_count);
  if (r.extremal_value) out += fmt::format("  extremal value: {:.12g} ({} graphs)\n", *r.extremal_value, r.extremal_graphs.size());
  if (r.seed) out += fmt::format("  seed: {}\n", *r.seed);
  if (!r.weight_class.empty()) out += fmt::format("  weight class: {}\n", r.weight_class);
  out += fmt::format("  violations: {}\n", r.violations.size());
  for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i) {
    const auto& v = r.violations[i];
    out += fmt::format("    {} expected {} actual {} gap {:.3g} {}\n", v.graph6, scalar_text(v.expected),
                       scalar_text(v.actual), v.gap, v.detail);
  }
  if (!r.exhibits.empty()) out += fmt::format("  exhibits: {}\n", r.exhibits.size());
  for (std::size_t i = 0; i < r.exhibits.size() && i < 10; ++i) {
    out += fmt::format("    {} value {} {}\n", r.exhibits[i].graph6, scalar_text(r.exhibits[i].value), r.exhibits[i].note);
  }
  out += fmt::format("  elapsed: {:.0f} ms\n", r.elapsed_ms);
  return out;
}

}  // namespace pathmax
