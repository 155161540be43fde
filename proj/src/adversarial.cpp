#include <algorithm>
#include <set>

#include "hlmenger/menger.hpp"

namespace hlmenger {

namespace {

class SetCollector {
 public:
  explicit SetCollector(std::size_t budget) : budget_(budget) {}

  void add(std::vector<EdgeIndex> s) {
    if (s.size() > budget_) s.resize(budget_);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (seen_.insert(s).second) sets_.push_back(std::move(s));
  }

  std::vector<std::vector<EdgeIndex>> take() { return std::move(sets_); }

 private:
  std::size_t budget_;
  std::set<std::vector<EdgeIndex>> seen_;
  std::vector<std::vector<EdgeIndex>> sets_;
};

// Edges at x whose other end is not in `keep`, in neighbor order.
void append_incident(const Graph& g, VertexId x, std::initializer_list<VertexId> keep, std::vector<EdgeIndex>& out) {
  for (const auto& inc : g.incident(x)) {
    if (std::find(keep.begin(), keep.end(), inc.neighbor) == keep.end()) out.push_back(inc.edge);
  }
}

std::vector<Graph::Incidence> sorted_incident(const Graph& g, VertexId x) {
  auto inc = g.incident(x);
  std::vector<Graph::Incidence> out(inc.begin(), inc.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.neighbor < b.neighbor; });
  return out;
}

}  // namespace

std::vector<std::vector<EdgeIndex>> adversarial_index_sets(const LineGraph& lg, std::size_t budget) {
  const Graph& g = lg.graph;
  const auto nv = static_cast<VertexId>(g.vertex_count());
  SetCollector out(budget);
  out.add({});
  if (budget == 0) return out.take();

  // One vertex's incident edges.
  for (VertexId x = 0; x < nv; ++x) {
    std::vector<EdgeIndex> s;
    append_incident(g, x, {}, s);
    out.add(std::move(s));
  }

  // E(u0, N(u0) \ {u}): u0 left hanging on u.
  for (VertexId u0 = 0; u0 < nv; ++u0) {
    for (const auto& keep : sorted_incident(g, u0)) {
      std::vector<EdgeIndex> s;
      append_incident(g, u0, {keep.neighbor}, s);
      out.add(std::move(s));
    }
  }

  // Separate an adjacent pair from everything else.
  for (const Edge& e : g.edges()) {
    std::vector<EdgeIndex> s;
    append_incident(g, e.u, {e.v}, s);
    append_incident(g, e.v, {e.u}, s);
    out.add(std::move(s));
  }

  // Two vertices' incident edges, first one then the other.
  for (VertexId a = 0; a < nv; ++a) {
    for (VertexId b = a + 1; b < nv; ++b) {
      std::vector<EdgeIndex> s;
      append_incident(g, a, {}, s);
      append_incident(g, b, {}, s);
      out.add(std::move(s));
    }
  }

  // Triangles: the pendant-path construction for every ordering and exit u3,
  // then the triangle cut off from the rest.
  for (const Edge& e : g.edges()) {
    for (const auto& inc : g.incident(e.v)) {
      const VertexId c = inc.neighbor;
      if (c <= e.v || !g.has_edge(e.u, c)) continue;
      const std::array<VertexId, 3> tri{e.u, e.v, c};
      std::vector<EdgeIndex> cut;
      for (VertexId x : tri) append_incident(g, x, {tri[0], tri[1], tri[2]}, cut);
      out.add(std::move(cut));
      std::array<VertexId, 3> order = tri;
      do {
        const VertexId u = order[0], u1 = order[1], u2 = order[2];
        for (const auto& exit : sorted_incident(g, u2)) {
          const VertexId u3 = exit.neighbor;
          if (u3 == u || u3 == u1) continue;
          std::vector<EdgeIndex> s;
          append_incident(g, u2, {u, u1, u3}, s);
          append_incident(g, u1, {u, u2}, s);
          out.add(std::move(s));
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }

  if (lg.has_partition()) {
    // Faults on E_f.
    std::vector<EdgeIndex> ef;
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (lg.is_f_vertex(e.u) || lg.is_f_vertex(e.v)) ef.push_back(i);
    }
    out.add(ef);
    if (ef.size() > budget) out.add(std::vector<EdgeIndex>(ef.end() - static_cast<std::ptrdiff_t>(budget), ef.end()));
    for (VertexId f : lg.f_vertices) {
      std::vector<EdgeIndex> left, right;
      for (const auto& inc : sorted_incident(g, f)) {
        (lg.parts[inc.neighbor] == LinePart::Right ? right : left).push_back(inc.edge);
      }
      out.add(left);
      out.add(right);
      std::vector<EdgeIndex> both = left;
      both.insert(both.end(), right.begin(), right.end());
      out.add(both);
    }

    // Faults split across the halves: ceil(b/2) at x, floor(b/2) at y.
    std::vector<VertexId> lefts, rights;
    for (VertexId x = 0; x < nv; ++x) {
      if (lg.parts[x] == LinePart::Left) lefts.push_back(x);
      if (lg.parts[x] == LinePart::Right) rights.push_back(x);
    }
    const std::size_t first = (budget + 1) / 2, second = budget / 2;
    for (VertexId x : lefts) {
      for (VertexId y : rights) {
        std::vector<EdgeIndex> s;
        for (const auto& inc : sorted_incident(g, x)) {
          if (s.size() == first) break;
          s.push_back(inc.edge);
        }
        std::size_t taken = 0;
        for (const auto& inc : sorted_incident(g, y)) {
          if (taken == second) break;
          s.push_back(inc.edge);
          ++taken;
        }
        out.add(std::move(s));
      }
    }
  }
  return out.take();
}

std::vector<FaultSet> adversarial_fault_sets(const LineGraph& lg, std::size_t budget) {
  std::vector<FaultSet> out;
  for (const auto& s : adversarial_index_sets(lg, budget)) out.push_back(FaultSet::from_indices(lg.graph, s));
  return out;
}

}  // namespace hlmenger
