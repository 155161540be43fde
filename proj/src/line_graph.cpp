#include "hlmenger/line_graph.hpp"

#include <algorithm>
#include <string>

#include "hlmenger/error.hpp"

namespace hlmenger {

VertexId LineGraph::vertex_of_edge(const Edge& e) const {
  auto idx = base.find_edge(e.u, e.v);
  if (!idx) {
    throw Error(ErrorCode::ForeignEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not a base edge");
  }
  return *idx;
}

LineGraph line_graph(const Graph& base) {
  std::vector<Edge> edges;
  for (VertexId x = 0; x < base.vertex_count(); ++x) {
    auto inc = base.incident(x);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.emplace_back(inc[i].edge, inc[j].edge);
    }
  }
  std::vector<std::string> labels;
  if (base.has_labels()) {
    labels.reserve(base.edge_count());
    for (const Edge& e : base.edges()) labels.push_back(base.labels()[e.u] + "-" + base.labels()[e.v]);
  }
  LineGraph out;
  out.graph = Graph(base.edge_count(), edges, std::move(labels));
  out.base = base;
  return out;
}

LineGraph line_graph(const HLNetwork& h) {
  if (h.dimension < 1) throw Error(ErrorCode::InvalidArgument, "network has no dimension");
  LineGraph out = line_graph(h.graph);
  out.dimension = h.dimension;
  if (h.dimension == 1) return out;  // K_2 has no join, hence no F_n
  const Graph& base = h.graph;
  const std::size_t half = h.half();
  auto leading = [&](VertexId v) -> int {
    if (base.has_labels() && !base.labels()[v].empty()) return base.labels()[v][0] == '1';
    return v >= half;
  };
  out.parts.resize(base.edge_count());
  for (EdgeIndex i = 0; i < base.edge_count(); ++i) {
    const Edge& e = base.edge(i);
    int a = leading(e.u), b = leading(e.v);
    out.parts[i] = a != b ? LinePart::F : (a == 0 ? LinePart::Left : LinePart::Right);
  }
  for (const Edge& e : h.f_edges) out.f_vertices.push_back(out.vertex_of_edge(e));
  std::sort(out.f_vertices.begin(), out.f_vertices.end());
  for (VertexId v : out.f_vertices) {
    if (out.parts[v] != LinePart::F) {
      throw Error(ErrorCode::Integrity, "f-edge at line vertex " + std::to_string(v) + " does not cross the halves");
    }
  }
  if (static_cast<std::size_t>(std::count(out.parts.begin(), out.parts.end(), LinePart::F)) != out.f_vertices.size()) {
    throw Error(ErrorCode::Integrity, "cross-half edges other than the recorded f-edges");
  }
  return out;
}

std::pair<LineGraph, std::vector<VertexId>> f_vertices(const HLNetwork& h) {
  LineGraph lg = line_graph(h);
  auto f = lg.f_vertices;
  return {std::move(lg), std::move(f)};
}

VerificationReport check_prop_3_1(const HLNetwork& h) {
  if (h.dimension < 2) throw Error(ErrorCode::InvalidArgument, "needs n >= 2");
  const LineGraph lg = line_graph(h);
  const std::size_t n = static_cast<std::size_t>(h.dimension);

  VerificationReport r;
  r.check_name = "prop31";
  r.target = {{"dimension", h.dimension}};
  std::uint64_t bad_plain = 0, bad_f = 0;
  for (VertexId v = 0; v < lg.graph.vertex_count(); ++v) {
    std::size_t to_f = 0, to_left = 0, to_right = 0;
    for (const auto& inc : lg.graph.incident(v)) {
      switch (lg.parts[inc.neighbor]) {
        case LinePart::F: ++to_f; break;
        case LinePart::Left: ++to_left; break;
        case LinePart::Right: ++to_right; break;
      }
    }
    bool ok = lg.parts[v] == LinePart::F ? (to_left == n - 1 && to_right == n - 1) : to_f == 2;
    ++r.counts.checked;
    if (ok) continue;
    ++(lg.parts[v] == LinePart::F ? bad_f : bad_plain);
    ++r.counts.failures;
    if (!r.witness) {
      Witness w;
      w.note = "line vertex " + std::to_string(v) + " violates the neighbor counts";
      w.extra = {{"vertex", v},
                 {"is_f_vertex", lg.parts[v] == LinePart::F},
                 {"f_neighbors", to_f},
                 {"left_neighbors", to_left},
                 {"right_neighbors", to_right}};
      r.witness = std::move(w);
    }
  }
  r.counts.visited = r.counts.checked;
  r.checks.push_back({"non_f_vertices_have_two_f_neighbors", bad_plain == 0,
                      std::to_string(bad_plain) + " violations"});
  r.checks.push_back({"f_vertices_have_n_minus_1_per_half", bad_f == 0, std::to_string(bad_f) + " violations"});
  return r;
}

BCDCPair bcdc(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "BCDC needs n >= 2");
  HLNetwork cq = gen_family({Family::Crossed, 0}, n);
  BCDCPair out;
  out.dimension = n;
  out.logical = line_graph(cq);

  const Graph& base = cq.graph;
  const auto switches = static_cast<VertexId>(base.vertex_count());
  std::vector<Edge> edges;
  std::vector<std::string> labels = base.labels();
  for (EdgeIndex i = 0; i < base.edge_count(); ++i) {
    const Edge& e = base.edge(i);
    edges.emplace_back(e.u, switches + i);
    edges.emplace_back(e.v, switches + i);
    labels.push_back(base.labels()[e.u] + "-" + base.labels()[e.v]);
  }
  out.original = Graph(switches + base.edge_count(), edges, std::move(labels));
  return out;
}

VerificationReport check_bcdc(const BCDCPair& pair) {
  VerificationReport r;
  r.check_name = "bcdc";
  r.target = {{"family", "crossed"}, {"n", pair.dimension}};
  const std::size_t n = static_cast<std::size_t>(pair.dimension);
  const std::size_t switches = pair.switch_count();
  const std::size_t servers = n * switches / 2;
  const Graph& a = pair.original;
  const Graph& b = pair.logical.graph;

  r.add_check("original_vertex_count", a.vertex_count() == switches + servers,
              std::to_string(a.vertex_count()) + " vertices, expected " + std::to_string(switches + servers));
  if (a.vertex_count() != switches + servers) return r;
  bool switch_deg = true, server_deg = true;
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    if (v < switches) switch_deg = switch_deg && a.degree(v) == n;
    else server_deg = server_deg && a.degree(v) == 2;
  }
  r.add_check("switch_degree", switch_deg, "switches have degree " + std::to_string(n));
  r.add_check("server_degree", server_deg, "servers have degree 2");
  r.add_check("logical_vertex_count", b.vertex_count() == servers,
              std::to_string(b.vertex_count()) + " vertices, expected " + std::to_string(servers));
  if (b.vertex_count() != servers) return r;

  // Servers sharing a switch must be adjacent in B_n, and those are all of
  // B_n's edges.
  std::size_t shared_pairs = 0;
  bool all_present = true;
  for (VertexId s = 0; s < switches; ++s) {
    auto inc = a.incident(s);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        ++shared_pairs;
        all_present = all_present && b.has_edge(inc[i].neighbor - static_cast<VertexId>(switches),
                                                inc[j].neighbor - static_cast<VertexId>(switches));
      }
    }
  }
  r.add_check("shared_switch_implies_adjacent", all_present);
  r.add_check("adjacent_implies_shared_switch", all_present && shared_pairs == b.edge_count(),
              std::to_string(b.edge_count()) + " logical edges, " + std::to_string(shared_pairs) + " shared-switch pairs");
  bool labels_ok = a.has_labels() && b.has_labels();
  for (VertexId i = 0; labels_ok && i < servers; ++i) {
    labels_ok = a.labels()[switches + i] == b.labels()[i];
  }
  r.add_check("server_labels", labels_ok, "server codes are pairs of switch codes");
  std::vector<std::size_t> degs;
  for (VertexId v = 0; v < b.vertex_count(); ++v) degs.push_back(b.degree(v));
  bool regular = std::all_of(degs.begin(), degs.end(), [&](std::size_t d) { return d == 2 * n - 2; });
  r.add_check("logical_regular", regular, "B_n is " + std::to_string(2 * n - 2) + "-regular");
  return r;
}

}  // namespace hlmenger
