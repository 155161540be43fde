#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlmenger/graph.hpp"
#include "json.hpp"

namespace hlmenger {

// Bump on any breaking change to the serialized layout.
inline constexpr const char* kReportSchemaVersion = "1.0";

struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string detail;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

// Structured counterexample. Only the fields relevant to a check are set.
struct Witness {
  std::vector<Edge> fault_edges;
  std::optional<std::pair<VertexId, VertexId>> pair;
  std::optional<std::size_t> path_count;
  std::optional<std::size_t> required;
  std::vector<Edge> cut;
  std::optional<std::size_t> largest_component;
  std::string note;
  nlohmann::json extra;  // check-specific facts, null when unused

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Counts {
  std::uint64_t visited = 0;
  std::uint64_t skipped_conditional = 0;
  std::uint64_t checked = 0;
  std::uint64_t adversarial = 0;
  std::uint64_t failures = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

struct VerificationReport {
  std::string schema_version = kReportSchemaVersion;
  std::string check_name;
  nlohmann::json target = nlohmann::json::object();
  std::string mode = "single";  // single | exhaustive | sampled
  nlohmann::json parameters = nlohmann::json::object();
  Counts counts;
  std::vector<CheckEntry> checks;
  std::optional<Witness> witness;
  std::string error;  // set only when the run could not complete
  double wall_seconds = 0.0;

  bool passed() const { return counts.failures == 0 && error.empty(); }

  // Record a named sub-check; a failing entry bumps the failure count and,
  // if no witness exists yet, becomes the witness note.
  void add_check(std::string name, bool ok, std::string detail = {});

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r, bool include_timing = true);
VerificationReport report_from_json(const nlohmann::json& j);

// Pretty-printed JSON. With include_timing = false the text depends only on
// the inputs, so two runs can be compared byte for byte.
std::string serialize(const VerificationReport& r, bool include_timing = true);
VerificationReport parse_report(const std::string& text);

nlohmann::json edges_json(const std::vector<Edge>& edges);

}  // namespace hlmenger
