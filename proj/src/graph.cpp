#include "hlmenger/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hlmenger/error.hpp"

namespace hlmenger {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::VertexOutOfRange: return "vertex out of range";
    case ErrorCode::DuplicateEdge: return "duplicate edge";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::ForeignEdge: return "edge not in host graph";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::InvalidBijection: return "invalid bijection";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::BudgetExceeded: return "budget exceeded";
    case ErrorCode::Integrity: return "integrity failure";
  }
  return "unknown error";
}

namespace {

std::string pair_text(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Graph::Graph(std::size_t n_vertices, std::span<const Edge> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n_vertices > std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorCode::InvalidArgument, "vertex count too large");
  }
  if (!labels_.empty() && labels_.size() != n_vertices) {
    throw Error(ErrorCode::InvalidArgument,
                "label count " + std::to_string(labels_.size()) + " does not match vertex count " +
                    std::to_string(n_vertices));
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n_vertices || e.v >= n_vertices) {
      throw Error(ErrorCode::VertexOutOfRange, "edge " + pair_text(e.u, e.v) + " has an endpoint outside [0," +
                                                   std::to_string(n_vertices) + ")");
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop " + pair_text(e.u, e.v));
    edges_.push_back(Edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + pair_text(dup->u, dup->v));
  }

  offsets_.assign(n_vertices + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, i};
    adjacency_[fill[e.v]++] = {e.u, i};
  }
  for (std::size_t v = 0; v < n_vertices; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside [0," + std::to_string(vertex_count()) + ")");
  }
}

std::span<const Graph::Incidence> Graph::incident(VertexId v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
  return vertex_count() == 0 ? 0 : best;
}

std::optional<EdgeIndex> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count() || a == b) return std::nullopt;
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

bool Graph::has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

const std::string& Graph::label(VertexId v) const {
  check_vertex(v);
  if (labels_.empty()) throw Error(ErrorCode::InvalidArgument, "graph has no labels");
  return labels_[v];
}

Graph Graph::without_edge_indices(std::span<const EdgeIndex> removed) const {
  std::vector<char> gone(edges_.size(), 0);
  for (EdgeIndex e : removed) {
    if (e >= edges_.size()) throw Error(ErrorCode::ForeignEdge, "edge index " + std::to_string(e) + " out of range");
    gone[e] = 1;
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    if (!gone[i]) kept.push_back(edges_[i]);
  }
  return Graph(vertex_count(), kept, labels_);
}

FaultSet::FaultSet(const Graph& host, std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (!host.has_edge(e.u, e.v)) throw Error(ErrorCode::ForeignEdge, "edge " + pair_text(e.u, e.v) + " is not in the host graph");
  }
  edges_ = std::move(edges);
}

FaultSet FaultSet::from_indices(const Graph& host, std::span<const EdgeIndex> indices) {
  std::vector<Edge> edges;
  edges.reserve(indices.size());
  for (EdgeIndex i : indices) {
    if (i >= host.edge_count()) throw Error(ErrorCode::ForeignEdge, "edge index " + std::to_string(i) + " out of range");
    edges.push_back(host.edge(i));
  }
  FaultSet f;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  f.edges_ = std::move(edges);
  return f;
}

bool FaultSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge(e.u, e.v));
}

std::vector<EdgeIndex> FaultSet::indices_in(const Graph& host) const {
  std::vector<EdgeIndex> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    auto idx = host.find_edge(e.u, e.v);
    if (!idx) throw Error(ErrorCode::ForeignEdge, "edge " + pair_text(e.u, e.v) + " is not in the host graph");
    out.push_back(*idx);
  }
  return out;
}

bool FaultSet::is_conditional_admissible(const Graph& host) const {
  return remove_edges(host, *this).min_degree() >= 2;
}

Graph build_graph(std::size_t n_vertices, std::span<const Edge> edges) { return Graph(n_vertices, edges); }

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }
std::size_t min_degree(const Graph& g) { return g.min_degree(); }

Graph remove_edges(const Graph& g, const FaultSet& f) {
  auto idx = f.indices_in(g);
  return g.without_edge_indices(idx);
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const auto& inc : g.incident(x)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t largest_component_size(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : components(g)) best = std::max(best, c.size());
  return best;
}

bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || components(g).size() == 1; }

std::size_t largest_component_size_without(const Graph& g, std::span<const EdgeIndex> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<char> gone(g.edge_count(), 0);
  for (EdgeIndex e : removed) gone.at(e) = 1;
  std::size_t best = n == 0 ? 0 : 1;
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    if (gone[i]) continue;
    VertexId a = find(g.edge(i).u), b = find(g.edge(i).v);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    best = std::max(best, size[a]);
  }
  return best;
}

bool separates(const Graph& g, std::span<const Edge> cut, VertexId u, VertexId v) {
  std::vector<EdgeIndex> idx;
  for (const Edge& e : cut) {
    auto i = g.find_edge(e.u, e.v);
    if (!i) throw Error(ErrorCode::ForeignEdge, "cut edge " + pair_text(e.u, e.v) + " is not in the graph");
    idx.push_back(*i);
  }
  Graph reduced = g.without_edge_indices(idx);
  std::vector<char> seen(reduced.vertex_count(), 0);
  std::vector<VertexId> stack{u};
  seen.at(u) = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (x == v) return false;
    for (const auto& inc : reduced.incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t subsets_up_to(std::uint64_t n, std::uint64_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::uint64_t j = 0; j <= std::min(k, n); ++j) {
    std::uint64_t c = binomial(n, j);
    if (c == kMax || total > kMax - c) return kMax;
    total += c;
  }
  return total;
}

}  // namespace hlmenger
