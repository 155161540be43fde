#include "hlmenger/report.hpp"

#include "hlmenger/error.hpp"

namespace hlmenger {

using nlohmann::json;

void VerificationReport::add_check(std::string name, bool ok, std::string detail) {
  if (!ok) {
    ++counts.failures;
    if (!witness) {
      Witness w;
      w.note = name + (detail.empty() ? "" : ": " + detail);
      witness = std::move(w);
    }
  }
  checks.push_back({std::move(name), ok, std::move(detail)});
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

namespace {

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  return out;
}

}  // namespace

json to_json(const Witness& w) {
  json j = json::object();
  if (!w.fault_edges.empty()) j["fault_edges"] = edges_json(w.fault_edges);
  if (w.pair) j["pair"] = {w.pair->first, w.pair->second};
  if (w.path_count) j["path_count"] = *w.path_count;
  if (w.required) j["required"] = *w.required;
  if (!w.cut.empty()) j["cut"] = edges_json(w.cut);
  if (w.largest_component) j["largest_component"] = *w.largest_component;
  if (!w.note.empty()) j["note"] = w.note;
  if (!w.extra.is_null()) j["extra"] = w.extra;
  return j;
}

Witness witness_from_json(const json& j) {
  Witness w;
  if (j.contains("fault_edges")) w.fault_edges = edges_from(j["fault_edges"]);
  if (j.contains("pair")) w.pair = std::make_pair(j["pair"].at(0).get<VertexId>(), j["pair"].at(1).get<VertexId>());
  if (j.contains("path_count")) w.path_count = j["path_count"].get<std::size_t>();
  if (j.contains("required")) w.required = j["required"].get<std::size_t>();
  if (j.contains("cut")) w.cut = edges_from(j["cut"]);
  if (j.contains("largest_component")) w.largest_component = j["largest_component"].get<std::size_t>();
  if (j.contains("note")) w.note = j["note"].get<std::string>();
  if (j.contains("extra")) w.extra = j["extra"];
  return w;
}

json to_json(const VerificationReport& r, bool include_timing) {
  json j;
  j["schema_version"] = r.schema_version;
  j["check"] = r.check_name;
  j["target"] = r.target;
  j["mode"] = r.mode;
  j["parameters"] = r.parameters;
  j["counts"] = {{"visited", r.counts.visited},
                 {"skipped_conditional", r.counts.skipped_conditional},
                 {"checked", r.counts.checked},
                 {"adversarial", r.counts.adversarial},
                 {"failures", r.counts.failures}};
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  j["passed"] = r.passed();
  if (!r.error.empty()) j["error"] = r.error;
  if (include_timing) j["timing"] = {{"wall_seconds", r.wall_seconds}};
  return j;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.check_name = j.at("check").get<std::string>();
    r.target = j.at("target");
    r.mode = j.at("mode").get<std::string>();
    r.parameters = j.at("parameters");
    const auto& c = j.at("counts");
    r.counts.visited = c.at("visited").get<std::uint64_t>();
    r.counts.skipped_conditional = c.at("skipped_conditional").get<std::uint64_t>();
    r.counts.checked = c.at("checked").get<std::uint64_t>();
    r.counts.adversarial = c.at("adversarial").get<std::uint64_t>();
    r.counts.failures = c.at("failures").get<std::uint64_t>();
    for (const auto& e : j.at("checks")) {
      r.checks.push_back({e.at("name").get<std::string>(), e.at("passed").get<bool>(), e.at("detail").get<std::string>()});
    }
    if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
    if (j.contains("error")) r.error = j["error"].get<std::string>();
    if (j.contains("timing")) r.wall_seconds = j["timing"].at("wall_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const VerificationReport& r, bool include_timing) {
  return to_json(r, include_timing).dump(2) + "\n";
}

VerificationReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("report is not JSON: ") + e.what());
  }
  return report_from_json(j);
}

}  // namespace hlmenger
