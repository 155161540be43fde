#include "hlmenger/hlmenger.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "hlmenger/edgelist.hpp"
#include "hlmenger/error.hpp"
#include "hlmenger/line_graph.hpp"
#include "hlmenger/menger.hpp"
#include "hlmenger/topology.hpp"
#include "hlmenger/verify.hpp"

struct hlm_graph {
  hlmenger::Graph g;
};

struct hlm_network {
  hlmenger::HLNetwork h;
};

struct hlm_line_graph {
  hlmenger::LineGraph lg;
};

namespace {

thread_local std::string last_error;

hlm_status status_of(hlmenger::ErrorCode code) {
  using hlmenger::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return HLM_ERR_INVALID_ARGUMENT;
    case ErrorCode::VertexOutOfRange: return HLM_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::DuplicateEdge: return HLM_ERR_DUPLICATE_EDGE;
    case ErrorCode::SelfLoop: return HLM_ERR_SELF_LOOP;
    case ErrorCode::ForeignEdge: return HLM_ERR_FOREIGN_EDGE;
    case ErrorCode::DimensionMismatch: return HLM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::InvalidBijection: return HLM_ERR_INVALID_BIJECTION;
    case ErrorCode::Parse: return HLM_ERR_PARSE;
    case ErrorCode::BudgetExceeded: return HLM_ERR_BUDGET_EXCEEDED;
    case ErrorCode::Integrity: return HLM_ERR_INTEGRITY;
  }
  return HLM_ERR_INTERNAL;
}

hlm_status fail(hlm_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
hlm_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HLM_OK;
  } catch (const hlmenger::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HLM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HLM_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define HLM_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) return fail(HLM_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

hlmenger::VerifyOptions convert(const hlm_verify_options& o) {
  if (!o.check) throw hlmenger::Error(hlmenger::ErrorCode::InvalidArgument, "no check given");
  auto kind = hlmenger::parse_check(o.check);
  if (!kind) throw hlmenger::Error(hlmenger::ErrorCode::InvalidArgument, std::string("unknown check '") + o.check + "'");
  hlmenger::VerifyOptions out;
  out.check = *kind;
  if (o.m >= 0) out.m = static_cast<std::size_t>(o.m);
  if (o.floor >= 0) out.floor = static_cast<std::size_t>(o.floor);
  if (o.budget >= 0) out.budget = static_cast<std::size_t>(o.budget);
  out.mode = o.sampled ? hlmenger::CampaignMode::Sampled : hlmenger::CampaignMode::Exhaustive;
  out.samples = o.samples;
  out.seed = o.seed;
  out.adversarial = o.adversarial != 0;
  out.all_witnesses = o.all_witnesses != 0;
  if (o.enumeration_budget > 0) out.enumeration_budget = o.enumeration_budget;
  out.jobs = o.jobs == 0 ? 1 : o.jobs;
  return out;
}

hlm_status verify(hlmenger::VerifyTarget target, const hlm_verify_options* options, const char* target_json,
                  char** report_json, int* outcome) {
  HLM_REQUIRE(options);
  HLM_REQUIRE(report_json);
  HLM_REQUIRE(outcome);
  return guarded([&] {
    if (target_json) target.description = nlohmann::json::parse(target_json);
    hlmenger::VerificationReport r = hlmenger::run_verification(target, convert(*options));
    *report_json = dup_string(hlmenger::serialize(r));
    *outcome = hlmenger::exit_code(r);
  });
}

}  // namespace

extern "C" {

const char* hlm_version(void) { return "0.1.0"; }

const char* hlm_status_string(hlm_status status) {
  switch (status) {
    case HLM_OK: return "ok";
    case HLM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HLM_ERR_VERTEX_OUT_OF_RANGE: return "vertex out of range";
    case HLM_ERR_DUPLICATE_EDGE: return "duplicate edge";
    case HLM_ERR_SELF_LOOP: return "self-loop";
    case HLM_ERR_FOREIGN_EDGE: return "foreign edge";
    case HLM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case HLM_ERR_INVALID_BIJECTION: return "invalid bijection";
    case HLM_ERR_PARSE: return "parse error";
    case HLM_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case HLM_ERR_INTEGRITY: return "integrity failure";
    case HLM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hlm_last_error(void) { return last_error.c_str(); }

void hlm_string_free(char* s) { std::free(s); }

hlm_status hlm_graph_create(size_t n_vertices, const uint32_t* pairs, size_t edge_count, hlm_graph** out) {
  HLM_REQUIRE(out);
  HLM_REQUIRE(pairs || edge_count == 0);
  return guarded([&] {
    std::vector<hlmenger::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new hlm_graph{hlmenger::build_graph(n_vertices, edges)};
  });
}

hlm_status hlm_graph_parse(const char* edge_list, hlm_graph** out) {
  HLM_REQUIRE(edge_list);
  HLM_REQUIRE(out);
  return guarded([&] { *out = new hlm_graph{hlmenger::parse_edge_list(edge_list)}; });
}

void hlm_graph_free(hlm_graph* g) { delete g; }

size_t hlm_graph_vertex_count(const hlm_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t hlm_graph_edge_count(const hlm_graph* g) { return g ? g->g.edge_count() : 0; }

hlm_status hlm_graph_degree(const hlm_graph* g, uint32_t v, size_t* out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = hlmenger::degree(g->g, v); });
}

hlm_status hlm_graph_min_degree(const hlm_graph* g, size_t* out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = hlmenger::min_degree(g->g); });
}

hlm_status hlm_graph_to_edgelist(const hlm_graph* g, char** out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = dup_string(hlmenger::to_edge_list(g->g)); });
}

hlm_status hlm_graph_edge_disjoint_paths(const hlm_graph* g, uint32_t u, uint32_t v, size_t* out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = hlmenger::max_edge_disjoint_paths(g->g, u, v).value; });
}

hlm_status hlm_graph_edge_connectivity(const hlm_graph* g, size_t* out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = hlmenger::edge_connectivity(g->g); });
}

hlm_status hlm_graph_vertex_connectivity(const hlm_graph* g, size_t* out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = hlmenger::vertex_connectivity(g->g); });
}

hlm_status hlm_graph_largest_component(const hlm_graph* g, size_t* out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = hlmenger::largest_component_size(g->g); });
}

hlm_status hlm_graph_is_smec(const hlm_graph* g, int* holds) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(holds);
  return guarded([&] { *holds = hlmenger::is_smec(g->g).holds ? 1 : 0; });
}

hlm_status hlm_network_generate(const char* family, int n, uint64_t seed, hlm_network** out) {
  HLM_REQUIRE(family);
  HLM_REQUIRE(out);
  return guarded([&] {
    auto f = hlmenger::parse_family(family);
    if (!f) throw hlmenger::Error(hlmenger::ErrorCode::InvalidArgument, std::string("unknown family '") + family + "'");
    *out = new hlm_network{hlmenger::gen_family({*f, seed}, n)};
  });
}

hlm_status hlm_network_from_graph(const hlm_graph* g, hlm_network** out) {
  HLM_REQUIRE(g);
  HLM_REQUIRE(out);
  return guarded([&] { *out = new hlm_network{hlmenger::network_from_graph(g->g)}; });
}

void hlm_network_free(hlm_network* h) { delete h; }

int hlm_network_dimension(const hlm_network* h) { return h ? h->h.dimension : 0; }

hlm_status hlm_network_graph(const hlm_network* h, hlm_graph** out) {
  HLM_REQUIRE(h);
  HLM_REQUIRE(out);
  return guarded([&] { *out = new hlm_graph{h->h.graph}; });
}

hlm_status hlm_network_construction_json(const hlm_network* h, char** out) {
  HLM_REQUIRE(h);
  HLM_REQUIRE(out);
  return guarded([&] { *out = dup_string(hlmenger::construction_json(h->h).dump(2) + "\n"); });
}

hlm_status hlm_line_graph_create(const hlm_graph* base, hlm_line_graph** out) {
  HLM_REQUIRE(base);
  HLM_REQUIRE(out);
  return guarded([&] { *out = new hlm_line_graph{hlmenger::line_graph(base->g)}; });
}

hlm_status hlm_line_graph_from_network(const hlm_network* h, hlm_line_graph** out) {
  HLM_REQUIRE(h);
  HLM_REQUIRE(out);
  return guarded([&] { *out = new hlm_line_graph{hlmenger::line_graph(h->h)}; });
}

void hlm_line_graph_free(hlm_line_graph* lg) { delete lg; }

hlm_status hlm_line_graph_graph(const hlm_line_graph* lg, hlm_graph** out) {
  HLM_REQUIRE(lg);
  HLM_REQUIRE(out);
  return guarded([&] { *out = new hlm_graph{lg->lg.graph}; });
}

hlm_status hlm_line_graph_f_vertex_count(const hlm_line_graph* lg, size_t* out) {
  HLM_REQUIRE(lg);
  HLM_REQUIRE(out);
  *out = lg->lg.f_vertices.size();
  return HLM_OK;
}

hlm_status hlm_line_graph_provenance_json(const hlm_line_graph* lg, char** out) {
  HLM_REQUIRE(lg);
  HLM_REQUIRE(out);
  return guarded([&] {
    const auto& l = lg->lg;
    nlohmann::json vertices = nlohmann::json::array();
    for (hlmenger::VertexId v = 0; v < l.graph.vertex_count(); ++v) {
      const auto& e = l.edge_of_vertex(v);
      nlohmann::json entry = {{"id", v}, {"edge", {e.u, e.v}}};
      if (l.graph.has_labels()) entry["label"] = l.graph.label(v);
      if (l.has_partition()) entry["f"] = l.is_f_vertex(v);
      vertices.push_back(std::move(entry));
    }
    nlohmann::json j = {{"base_vertices", l.base.vertex_count()}, {"vertices", std::move(vertices)}};
    if (l.has_partition()) {
      j["dimension"] = l.dimension;
      j["f_vertices"] = l.f_vertices;
    }
    *out = dup_string(j.dump(2) + "\n");
  });
}

hlm_status hlm_bcdc_create(int n, hlm_graph** original, hlm_line_graph** logical) {
  HLM_REQUIRE(original);
  HLM_REQUIRE(logical);
  return guarded([&] {
    hlmenger::BCDCPair pair = hlmenger::bcdc(n);
    auto* a = new hlm_graph{std::move(pair.original)};
    *logical = new hlm_line_graph{std::move(pair.logical)};
    *original = a;
  });
}

void hlm_verify_options_init(hlm_verify_options* o) {
  if (!o) return;
  o->check = "smec";
  o->m = -1;
  o->floor = -1;
  o->budget = -1;
  o->sampled = 0;
  o->samples = 10000;
  o->seed = 0;
  o->adversarial = 0;
  o->all_witnesses = 0;
  o->enumeration_budget = 0;
  o->jobs = 1;
}

hlm_status hlm_verify_network(const hlm_network* h, const hlm_verify_options* options, const char* target_json,
                              char** report_json, int* outcome) {
  HLM_REQUIRE(h);
  hlmenger::VerifyTarget t;
  t.network = h->h;
  return verify(std::move(t), options, target_json, report_json, outcome);
}

hlm_status hlm_verify_graph(const hlm_graph* g, const hlm_verify_options* options, const char* target_json,
                            char** report_json, int* outcome) {
  HLM_REQUIRE(g);
  hlmenger::VerifyTarget t;
  t.graph = g->g;
  return verify(std::move(t), options, target_json, report_json, outcome);
}

hlm_status hlm_error_report(const char* check, const char* message, char** report_json) {
  HLM_REQUIRE(report_json);
  return guarded([&] {
    hlmenger::VerificationReport r;
    r.check_name = check ? check : "";
    r.error = message ? message : "error";
    *report_json = dup_string(hlmenger::serialize(r));
  });
}

}  // extern "C"
