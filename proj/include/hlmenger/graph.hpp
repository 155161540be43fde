#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hlmenger {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Undirected edge. Stored canonically with u < v everywhere in the library.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices [0, vertex_count()).
//
// Edges are kept sorted in canonical order, so an EdgeIndex is a stable name
// for an edge and doubles as the line-graph vertex id of that edge. Adjacency
// is stored in CSR form with the edge index next to every neighbor entry.
class Graph {
 public:
  struct Incidence {
    VertexId neighbor;
    EdgeIndex edge;
  };

  Graph() = default;

  // Throws Error{VertexOutOfRange|SelfLoop|DuplicateEdge} naming the
  // offending pair. Pairs may be given in any orientation and order.
  Graph(std::size_t n_vertices, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::span<const Incidence> incident(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t min_degree() const noexcept;
  bool has_edge(VertexId a, VertexId b) const;
  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const;

  // Same vertex set and labels, minus the edges at the given indices
  // (duplicates ignored).
  Graph without_edge_indices(std::span<const EdgeIndex> removed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
  std::vector<std::string> labels_;
};

// A set of edges of some host graph, in canonical sorted order.
class FaultSet {
 public:
  FaultSet() = default;

  // Throws Error{ForeignEdge} when an edge is not in `host`.
  FaultSet(const Graph& host, std::vector<Edge> edges);

  static FaultSet from_indices(const Graph& host, std::span<const EdgeIndex> indices);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains(const Edge& e) const;

  // Indices of the member edges inside `host`; throws ForeignEdge if any
  // member is not an edge of `host`.
  std::vector<EdgeIndex> indices_in(const Graph& host) const;

  // δ(host − F) ≥ 2, the admissibility condition for conditional faults.
  bool is_conditional_admissible(const Graph& host) const;

  friend bool operator==(const FaultSet&, const FaultSet&) = default;

 private:
  std::vector<Edge> edges_;
};

struct FlowResult {
  std::size_t value = 0;
  // Minimum (u,v)-edge cut taken from the residual source side.
  std::vector<Edge> cut;
};

Graph build_graph(std::size_t n_vertices, std::span<const Edge> edges);

std::size_t degree(const Graph& g, VertexId v);
std::size_t min_degree(const Graph& g);

Graph remove_edges(const Graph& g, const FaultSet& f);

std::vector<std::vector<VertexId>> components(const Graph& g);
std::size_t largest_component_size(const Graph& g);
bool is_connected(const Graph& g);

// Largest component of g minus the given edge indices, without building the
// reduced graph.
std::size_t largest_component_size_without(const Graph& g, std::span<const EdgeIndex> removed);

// Maximum number of edge-disjoint (u,v)-paths with a minimum cut certificate.
// Applies to every distinct pair, adjacent or not.
FlowResult max_edge_disjoint_paths(const Graph& g, VertexId u, VertexId v);

// True iff deleting `cut` from g leaves no (u,v)-path.
bool separates(const Graph& g, std::span<const Edge> cut, VertexId u, VertexId v);

// λ(G); 0 for graphs that are disconnected or have fewer than two vertices.
std::size_t edge_connectivity(const Graph& g);
// κ(G); n−1 for complete graphs, 0 for disconnected graphs.
std::size_t vertex_connectivity(const Graph& g);
// Maximum number of internally vertex-disjoint paths between non-adjacent u, v.
std::size_t local_vertex_connectivity(const Graph& g, VertexId u, VertexId v);

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Exhaustive oracle: the smallest k < limit such that some k-subset of edges
// separates u from v, enumerating subsets in size order. nullopt when no
// subset below `limit` separates them. Throws BudgetExceeded when the number
// of subsets to visit exceeds `budget`.
std::optional<std::size_t> brute_force_min_cut(const Graph& g, VertexId u, VertexId v,
                                               std::size_t limit,
                                               std::uint64_t budget = kDefaultSubsetBudget);

// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// Σ_{j ≤ k} C(n, j), saturating.
std::uint64_t subsets_up_to(std::uint64_t n, std::uint64_t k);

}  // namespace hlmenger
