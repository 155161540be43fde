#include <algorithm>
#include <string>

#include "hlmenger/error.hpp"
#include "hlmenger/menger.hpp"

namespace hlmenger {

namespace {

int require_dimension(const LineGraph& lg, int min_n) {
  if (lg.dimension < min_n) {
    throw Error(ErrorCode::InvalidArgument,
                "construction needs n >= " + std::to_string(min_n) + ", got " + std::to_string(lg.dimension));
  }
  return lg.dimension;
}

std::vector<VertexId> sorted_neighbors(const Graph& g, VertexId x) {
  std::vector<VertexId> out;
  for (const auto& inc : g.incident(x)) out.push_back(inc.neighbor);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> outside_closed_neighborhood(const Graph& g, std::initializer_list<VertexId> centers) {
  std::vector<char> blocked(g.vertex_count(), 0);
  for (VertexId c : centers) {
    blocked[c] = 1;
    for (const auto& inc : g.incident(c)) blocked[inc.neighbor] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (!blocked[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

TightnessWitness tightness_unconditional(const LineGraph& lg) {
  const int n = require_dimension(lg, 3);
  const Graph& g = lg.graph;
  const VertexId u0 = 0;
  const auto nbrs = sorted_neighbors(g, u0);
  if (nbrs.empty()) throw Error(ErrorCode::Integrity, "line vertex 0 is isolated");
  const VertexId u = nbrs.front();

  std::vector<Edge> s;
  for (VertexId x : nbrs) {
    if (x != u) s.emplace_back(u0, x);
  }
  TightnessWitness w;
  w.fault_set = FaultSet(g, std::move(s));
  w.u = u;
  w.u0 = u0;
  w.candidates = outside_closed_neighborhood(g, {u0});
  if (w.candidates.empty()) throw Error(ErrorCode::Integrity, "no vertex outside N[u0]");
  w.v = w.candidates.front();
  w.expected_max_paths = static_cast<std::size_t>(2 * n - 3);
  w.required = static_cast<std::size_t>(2 * n - 2);
  return w;
}

TightnessWitness tightness_conditional(const LineGraph& lg) {
  const int n = require_dimension(lg, 4);
  const Graph& g = lg.graph;
  const Graph& base = lg.base;

  VertexId x = 0;
  while (x < base.vertex_count() && base.degree(x) < 3) ++x;
  if (x == base.vertex_count()) throw Error(ErrorCode::Integrity, "no base vertex of degree >= 3");
  std::vector<VertexId> clique;
  for (const auto& inc : base.incident(x)) clique.push_back(inc.edge);
  std::sort(clique.begin(), clique.end());
  const VertexId u = clique[0], u1 = clique[1], u2 = clique[2];

  std::optional<VertexId> u3;
  for (VertexId y : sorted_neighbors(g, u2)) {
    if (y != u && y != u1) {
      u3 = y;
      break;
    }
  }
  if (!u3) throw Error(ErrorCode::Integrity, "u2 has no neighbor outside the triangle");

  std::vector<Edge> s;
  for (VertexId y : sorted_neighbors(g, u2)) {
    if (y != u && y != u1 && y != *u3) s.emplace_back(u2, y);
  }
  for (VertexId y : sorted_neighbors(g, u1)) {
    if (y != u && y != u2) s.emplace_back(u1, y);
  }
  TightnessWitness w;
  w.fault_set = FaultSet(g, std::move(s));
  w.u = u;
  w.chain = std::array<VertexId, 3>{u1, u2, *u3};
  w.candidates = outside_closed_neighborhood(g, {u, u1, u2});
  if (w.candidates.empty()) throw Error(ErrorCode::Integrity, "no vertex outside N[{u,u1,u2}]");
  w.v = w.candidates.front();
  w.expected_max_paths = static_cast<std::size_t>(2 * n - 3);
  w.required = static_cast<std::size_t>(2 * n - 2);
  return w;
}

VerificationReport verify_tightness(const LineGraph& lg, const TightnessWitness& w, bool all_candidates) {
  const bool conditional = w.chain.has_value();
  const std::size_t n = (w.expected_max_paths + 3) / 2;
  const std::size_t expected_size = conditional ? 4 * n - 9 : 2 * n - 3;

  VerificationReport r;
  r.check_name = conditional ? "tight-cond" : "tight-uncond";
  r.parameters = {{"u", w.u}, {"v", w.v}, {"all_candidates", all_candidates}, {"vertex_choice", "lowest-id"}};
  if (w.u0) r.parameters["u0"] = *w.u0;
  if (w.chain) r.parameters["chain"] = {(*w.chain)[0], (*w.chain)[1], (*w.chain)[2]};

  const Graph reduced = remove_edges(lg.graph, w.fault_set);
  std::vector<std::string> broken;
  auto fact = [&](std::string name, bool ok, std::string detail) {
    if (!ok) broken.push_back(name);
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  fact("fault_set_size", w.fault_set.size() == expected_size,
       "|S| = " + std::to_string(w.fault_set.size()) + ", expected " + std::to_string(expected_size));
  fact("v_outside_neighborhood",
       std::find(w.candidates.begin(), w.candidates.end(), w.v) != w.candidates.end(),
       "v = " + std::to_string(w.v));
  if (conditional) {
    const auto [u1, u2, u3] = *w.chain;
    fact("conditional_min_degree", reduced.min_degree() >= 2,
         "min degree of L - S is " + std::to_string(reduced.min_degree()));
    fact("u1_degree", reduced.degree(u1) == 2, "deg(u1) = " + std::to_string(reduced.degree(u1)));
    fact("u2_degree", reduced.degree(u2) == 3, "deg(u2) = " + std::to_string(reduced.degree(u2)));
    fact("u3_hangs_on_u2", reduced.has_edge(u2, u3), "u2 - u3 kept");
  } else {
    fact("u0_pendant", reduced.degree(*w.u0) == 1, "deg(u0) = " + std::to_string(reduced.degree(*w.u0)));
  }

  std::vector<VertexId> targets = all_candidates ? w.candidates : std::vector<VertexId>{w.v};
  nlohmann::json per_v = nlohmann::json::array();
  for (VertexId v : targets) {
    FlowResult flow = max_edge_disjoint_paths(reduced, w.u, v);
    const std::size_t required = std::min(reduced.degree(w.u), reduced.degree(v));
    const bool certified = separates(reduced, flow.cut, w.u, v) && flow.cut.size() == flow.value;
    const bool violated = certified && flow.value <= w.expected_max_paths && flow.value < required;
    ++r.counts.visited;
    ++r.counts.checked;
    if (violated) ++r.counts.failures;
    if (all_candidates) {
      per_v.push_back({{"v", v}, {"path_count", flow.value}, {"required", required}, {"violated", violated}});
    }
    if (v != w.v) continue;
    fact("cut_certificate", certified, "cut of size " + std::to_string(flow.cut.size()) + " separates u and v");
    if (!violated) continue;
    Witness wit;
    wit.fault_edges = w.fault_set.edges();
    wit.pair = {w.u, v};
    wit.path_count = flow.value;
    wit.required = required;
    wit.cut = std::move(flow.cut);
    wit.note = "at most " + std::to_string(w.expected_max_paths) + " edge-disjoint paths between u and v in L - S";
    r.witness = std::move(wit);
  }
  if (all_candidates) {
    if (r.witness) r.witness->extra = {{"per_v", per_v}};
    else r.parameters["per_v"] = per_v;
  }
  if (!broken.empty()) {
    std::string msg = "construction invariant failed:";
    for (const auto& b : broken) msg += " " + b;
    r.error = msg;
  }
  return r;
}

FaultPartition partition_faults(const LineGraph& lg, const FaultSet& s) {
  if (!lg.has_partition()) throw Error(ErrorCode::InvalidArgument, "line graph carries no F_n partition");
  s.indices_in(lg.graph);
  FaultPartition out;
  for (const Edge& e : s.edges()) {
    if (lg.is_f_vertex(e.u) || lg.is_f_vertex(e.v)) {
      out.sf.push_back(e);
    } else if (lg.parts[e.u] == LinePart::Left) {
      out.s1.push_back(e);
    } else {
      out.s2.push_back(e);
    }
  }
  return out;
}

}  // namespace hlmenger
