#include <algorithm>
#include <limits>
#include <string>

#include "flow_network.hpp"
#include "hlmenger/error.hpp"
#include "hlmenger/menger.hpp"

namespace hlmenger {

namespace {

using detail::FlowNetwork;

FlowNetwork unit_network(const Graph& g) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v);
  return net;
}

SmecVerdict violation(const Graph& g, VertexId u, VertexId v, std::size_t paths, std::size_t required) {
  FlowResult flow = max_edge_disjoint_paths(g, u, v);
  if (flow.value != paths) {
    throw Error(ErrorCode::Integrity, "pair (" + std::to_string(u) + "," + std::to_string(v) + ") flow " +
                                          std::to_string(flow.value) + " disagrees with tree value " +
                                          std::to_string(paths));
  }
  Witness w;
  w.pair = {u, v};
  w.path_count = flow.value;
  w.required = required;
  w.cut = std::move(flow.cut);
  return {false, std::move(w)};
}

}  // namespace

SmecVerdict is_smec(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return {};

  // Gomory-Hu tree, Gusfield's variant without contraction: the (u,v) min cut
  // is the lightest edge on the tree path between u and v.
  std::vector<VertexId> parent(n, 0);
  std::vector<std::size_t> weight(n, 0);
  for (VertexId s = 1; s < n; ++s) {
    const VertexId t = parent[s];
    FlowNetwork net = unit_network(g);
    weight[s] = static_cast<std::size_t>(net.max_flow(s, t));
    auto side = net.source_side(s);
    for (VertexId j = s + 1; j < n; ++j) {
      if (side[j] && parent[j] == t) parent[j] = s;
    }
  }

  std::vector<std::vector<std::pair<VertexId, std::size_t>>> tree(n);
  for (VertexId s = 1; s < n; ++s) {
    tree[s].push_back({parent[s], weight[s]});
    tree[parent[s]].push_back({s, weight[s]});
  }

  std::vector<std::size_t> bottleneck(n);
  std::vector<char> seen(n);
  std::vector<VertexId> stack;
  for (VertexId u = 0; u + 1 < n; ++u) {
    const std::size_t du = g.degree(u);
    if (du == 0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    bottleneck[u] = std::numeric_limits<std::size_t>::max();
    seen[u] = 1;
    stack.assign(1, u);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (auto [y, w] : tree[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        bottleneck[y] = std::min(bottleneck[x], w);
        stack.push_back(y);
      }
    }
    for (VertexId v = u + 1; v < n; ++v) {
      const std::size_t required = std::min(du, g.degree(v));
      if (bottleneck[v] < required) return violation(g, u, v, bottleneck[v], required);
    }
  }
  return {};
}

SmecVerdict is_smec_pairwise(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (VertexId u = 0; u + 1 < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const std::size_t required = std::min(g.degree(u), g.degree(v));
      if (required == 0) continue;
      FlowNetwork net = unit_network(g);
      auto paths = static_cast<std::size_t>(net.max_flow(u, v, static_cast<FlowNetwork::Capacity>(required)));
      if (paths < required) return violation(g, u, v, paths, required);
    }
  }
  return {};
}

}  // namespace hlmenger
