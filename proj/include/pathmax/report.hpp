#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pathmax {

using Json = nlohmann::ordered_json;

inline constexpr const char* kLibraryVersion = "pathmax 0.1.0";

/// A failed check, with enough data to replay it in isolation.
struct Violation {
  std::string graph6;
  Json expected;
  Json actual;
  double gap = 0.0;
  std::string detail;
};

/// A finding that is expected, e.g. a non-path maximizer for weights outside N(n).
struct Exhibit {
  std::string graph6;
  Json value;
  std::string weights_csv;
  std::string note;
};

struct VerificationReport {
  std::string task;
  Json config = Json::object();
  std::uint64_t universe_count = 0;
  std::optional<double> extremal_value;
  std::vector<std::string> extremal_graphs;
  std::vector<Violation> violations;
  std::vector<Exhibit> exhibits;
  Json tolerances = Json::object();
  Json details = Json::object();
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> seed;
  std::string weight_class;

  /// Nonempty universe and no violations.
  [[nodiscard]] bool passed() const noexcept { return universe_count > 0 && violations.empty(); }
};

Json to_json(const VerificationReport& report);

/// One row per extremal graph, violation and exhibit.
std::string to_csv(const VerificationReport& report);

/// Short human summary.
std::string to_text(const VerificationReport& report);

}  // namespace pathmax
