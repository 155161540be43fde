#pragma once

// Independent reference implementations used to check the library. Nothing
// here calls into the library beyond the Graph/Edge containers.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hlmenger/graph.hpp"

namespace oracle {

using hlmenger::Edge;
using hlmenger::Graph;
using hlmenger::VertexId;

using AdjMatrix = std::vector<std::vector<char>>;

inline AdjMatrix matrix(std::size_t n, const std::vector<Edge>& edges) {
  AdjMatrix a(n, std::vector<char>(n, 0));
  for (const Edge& e : edges) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// BFS reachability over an edge list with some edges masked out.
inline bool reachable(std::size_t n, const std::vector<Edge>& edges, const std::vector<char>& removed, VertexId s,
                      VertexId t) {
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (removed[i]) continue;
    adj[edges[i].u].push_back(edges[i].v);
    adj[edges[i].v].push_back(edges[i].u);
  }
  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(s);
  seen[s] = 1;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (x == t) return true;
    for (VertexId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        q.push(y);
      }
    }
  }
  return false;
}

// Smallest edge cut separating s and t, by trying every subset of the edge
// set as a bitmask, smallest popcount first. Needs |E| ≤ 20.
inline std::size_t min_edge_cut(std::size_t n, const std::vector<Edge>& edges, VertexId s, VertexId t) {
  const std::size_t m = edges.size();
  std::size_t best = m;
  std::vector<char> removed(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    for (std::size_t i = 0; i < m; ++i) removed[i] = (mask >> i) & 1u;
    if (!reachable(n, edges, removed, s, t)) best = k;
  }
  return best;
}

inline bool connected_without(const AdjMatrix& a, const std::vector<char>& gone) {
  const std::size_t n = a.size();
  VertexId start = 0;
  std::size_t alive = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!gone[v]) {
      if (alive == 0) start = v;
      ++alive;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y = 0; y < n; ++y) {
      if (a[x][y] && !gone[y] && !seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == alive;
}

// κ by removing every vertex subset in size order; n − 1 for complete graphs.
inline std::size_t vertex_connectivity(std::size_t n, const std::vector<Edge>& edges) {
  const AdjMatrix a = matrix(n, edges);
  if (n <= 1) return 0;
  if (!connected_without(a, std::vector<char>(n, 0))) return 0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    std::sort(pick.begin(), pick.end());
    do {
      if (!connected_without(a, pick)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

inline std::size_t component_count(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<VertexId> parent(n);
  for (VertexId v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::size_t comps = n;
  for (const Edge& e : edges) {
    VertexId a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

// Line graph by checking every pair of base edges for a shared endpoint.
inline std::set<std::pair<std::size_t, std::size_t>> line_edges(const std::vector<Edge>& base) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const Edge& a = base[i];
      const Edge& b = base[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out.insert({i, j});
    }
  }
  return out;
}

// Bit i (1-based, a_1 least significant) of x.
inline int bit(std::uint32_t x, int i) { return static_cast<int>((x >> (i - 1)) & 1u); }

// The dimension-i neighbor of x in each named family, straight from the
// textbook definitions.
inline std::uint32_t hypercube_neighbor(std::uint32_t x, int i) { return x ^ (1u << (i - 1)); }

inline std::uint32_t ltq_neighbor(std::uint32_t x, int i) {
  std::uint32_t y = x ^ (1u << (i - 1));
  if (i >= 3 && bit(x, 1) == 1) y ^= 1u << (i - 2);
  return y;
}

// Cull-Larson: flip bit i alone when the bit above is 0, else bits i..1.
inline std::uint32_t mobius_neighbor(std::uint32_t x, int i, int n, int top) {
  const int above = i == n ? top : bit(x, i + 1);
  if (above == 0) return x ^ (1u << (i - 1));
  return x ^ ((1u << i) - 1u);
}

// Efe's crossed cube: differ at bit l, a_{l-1} kept when l is even, lower
// 2-bit groups replaced by their pair-related partner (01 <-> 11).
inline std::uint32_t crossed_neighbor(std::uint32_t x, int l) {
  std::uint32_t y = x ^ (1u << (l - 1));
  const int groups = (l - 1) / 2;
  for (int g = 1; g <= groups; ++g) {
    if (bit(x, 2 * g - 1) == 1) y ^= 1u << (2 * g - 1);
  }
  return y;
}

enum class Named { Hypercube, Crossed, Mobius0, Mobius1, Ltq };

inline std::vector<Edge> family_edges(Named f, int n) {
  std::set<Edge> out;
  const std::uint32_t size = 1u << n;
  for (std::uint32_t x = 0; x < size; ++x) {
    for (int i = 1; i <= n; ++i) {
      std::uint32_t y = 0;
      switch (f) {
        case Named::Hypercube: y = hypercube_neighbor(x, i); break;
        case Named::Crossed: y = crossed_neighbor(x, i); break;
        case Named::Mobius0: y = mobius_neighbor(x, i, n, 0); break;
        case Named::Mobius1: y = mobius_neighbor(x, i, n, 1); break;
        case Named::Ltq: y = ltq_neighbor(x, i); break;
      }
      out.insert(Edge(x, y));
    }
  }
  return {out.begin(), out.end()};
}

inline std::string bits(std::uint32_t x, int width) {
  std::string s;
  for (int i = width; i >= 1; --i) s.push_back(static_cast<char>('0' + bit(x, i)));
  return s;
}

// Random simple graph with exactly `m` edges (m ≤ C(n,2)).
inline std::vector<Edge> random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return all;
}

}  // namespace oracle
