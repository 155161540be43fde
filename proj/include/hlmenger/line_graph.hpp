#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hlmenger/graph.hpp"
#include "hlmenger/report.hpp"
#include "hlmenger/topology.hpp"

namespace hlmenger {

// Where a line vertex sits relative to the top-level join of its base
// network: inside L(Q^1_{n-1}), inside L(Q^2_{n-1}), or an f-vertex.
enum class LinePart : std::uint8_t { Left, Right, F };

// L(base) with provenance. Line vertex i is base edge i (base edges are kept in
// canonical order), so both directions of the map are index lookups.
struct LineGraph {
  Graph graph;
  Graph base;
  int dimension = 0;                 // n when built from an HLNetwork, else 0
  std::vector<VertexId> f_vertices;  // F_n, sorted; empty without an HLNetwork
  std::vector<LinePart> parts;       // per line vertex; empty without an HLNetwork

  const Edge& edge_of_vertex(VertexId v) const { return base.edge(v); }
  // Throws ForeignEdge when `e` is not a base edge.
  VertexId vertex_of_edge(const Edge& e) const;

  bool has_partition() const { return !parts.empty(); }
  bool is_f_vertex(VertexId v) const { return has_partition() && parts.at(v) == LinePart::F; }
};

LineGraph line_graph(const Graph& base);

// Line graph of an HL network with F_n and the half of every other vertex,
// taken from the leading label bit of its base edge's endpoints.
LineGraph line_graph(const HLNetwork& h);

// (L(Q_n), F_n).
std::pair<LineGraph, std::vector<VertexId>> f_vertices(const HLNetwork& h);

// Every non-f line vertex has exactly two f-neighbors; every f-vertex has
// n-1 neighbors in each half. Failures count violating vertices.
VerificationReport check_prop_3_1(const HLNetwork& h);

// BCDC data-center pair built on the crossed cube CQ_n: the original graph
// A_n subdivides every edge (switches keep ids [0, 2^n), the server on edge i
// gets id 2^n + i and label "<a>-<b>"), and the logical graph is B_n = L(CQ_n).
struct BCDCPair {
  int dimension = 0;
  Graph original;
  LineGraph logical;

  std::size_t switch_count() const { return std::size_t{1} << dimension; }
};

BCDCPair bcdc(int n);

// Vertex counts, switch/server degrees, and that two servers are adjacent in
// B_n exactly when they share a switch in A_n.
VerificationReport check_bcdc(const BCDCPair& pair);

}  // namespace hlmenger
