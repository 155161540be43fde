#include <algorithm>
#include <string>

#include "flow_network.hpp"
#include "hlmenger/error.hpp"
#include "hlmenger/graph.hpp"

namespace hlmenger {

namespace {

using detail::FlowNetwork;

void check_pair(const Graph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                                 ") outside [0," + std::to_string(g.vertex_count()) + ")");
  }
  if (u == v) throw Error(ErrorCode::InvalidArgument, "source and sink coincide: " + std::to_string(u));
}

FlowNetwork unit_network(const Graph& g) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v);
  return net;
}

}  // namespace

FlowResult max_edge_disjoint_paths(const Graph& g, VertexId u, VertexId v) {
  check_pair(g, u, v);
  FlowNetwork net = unit_network(g);
  FlowResult out;
  out.value = static_cast<std::size_t>(net.max_flow(u, v));
  auto side = net.source_side(u);
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) out.cut.push_back(e);
  }
  if (out.cut.size() != out.value) {
    throw Error(ErrorCode::Integrity, "cut size " + std::to_string(out.cut.size()) + " differs from flow value " +
                                          std::to_string(out.value));
  }
  return out;
}

std::size_t edge_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return 0;
  std::size_t best = g.min_degree();
  for (VertexId v = 1; v < n && best > 0; ++v) {
    FlowNetwork net = unit_network(g);
    best = std::min(best, static_cast<std::size_t>(net.max_flow(0, v, static_cast<FlowNetwork::Capacity>(best))));
  }
  return best;
}

std::size_t local_vertex_connectivity(const Graph& g, VertexId u, VertexId v) {
  check_pair(g, u, v);
  if (g.has_edge(u, v)) {
    throw Error(ErrorCode::InvalidArgument, "local vertex connectivity needs non-adjacent vertices");
  }
  // Split every vertex x into x_in = 2x and x_out = 2x+1 joined by a unit arc;
  // each undirected edge becomes two arcs out -> in.
  const std::size_t n = g.vertex_count();
  const auto big = static_cast<FlowNetwork::Capacity>(n);
  FlowNetwork net(2 * n);
  for (VertexId x = 0; x < n; ++x) net.add_arc(2 * x, 2 * x + 1, (x == u || x == v) ? big : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, big);
    net.add_arc(2 * e.v + 1, 2 * e.u, big);
  }
  return static_cast<std::size_t>(net.max_flow(2 * u + 1, 2 * v));
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;

  // Esfahanian-Hakimi: some minimum separator avoids a minimum-degree vertex
  // x, or else x lies in it and two of x's neighbors sit on opposite sides.
  VertexId x = 0;
  for (VertexId w = 1; w < n; ++w) {
    if (g.degree(w) < g.degree(x)) x = w;
  }
  std::size_t best = g.degree(x);
  for (VertexId w = 0; w < n; ++w) {
    if (w != x && !g.has_edge(x, w)) best = std::min(best, local_vertex_connectivity(g, x, w));
  }
  auto nbrs = g.incident(x);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      VertexId a = nbrs[i].neighbor, b = nbrs[j].neighbor;
      if (!g.has_edge(a, b)) best = std::min(best, local_vertex_connectivity(g, a, b));
    }
  }
  return best;
}

std::optional<std::size_t> brute_force_min_cut(const Graph& g, VertexId u, VertexId v, std::size_t limit,
                                               std::uint64_t budget) {
  check_pair(g, u, v);
  const std::size_t m = g.edge_count();
  if (limit == 0) return std::nullopt;
  const std::uint64_t work = subsets_up_to(m, limit - 1);
  if (work > budget) {
    throw Error(ErrorCode::BudgetExceeded, "cut enumeration needs " + std::to_string(work) +
                                               " subsets, budget is " + std::to_string(budget));
  }

  std::vector<char> gone(m, 0);
  std::vector<char> seen(g.vertex_count());
  std::vector<VertexId> stack;
  auto connected = [&] {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, u);
    seen[u] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (const auto& inc : g.incident(x)) {
        if (!gone[inc.edge] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
      }
    }
    return false;
  };

  for (std::size_t k = 0; k < limit && k <= m; ++k) {
    // Lexicographic k-combinations of edge indices.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      for (std::size_t i : pick) gone[i] = 1;
      bool cut = !connected();
      for (std::size_t i : pick) gone[i] = 0;
      if (cut) return k;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace hlmenger
