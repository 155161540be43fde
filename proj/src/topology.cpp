#include "hlmenger/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hlmenger/error.hpp"
#include "hlmenger/random.hpp"

namespace hlmenger {

namespace {

constexpr int kMaxDimension = 24;

// Bit i of id, 1-based from the least significant end (a_i in a_n...a_1).
inline unsigned bit(VertexId id, int i) { return (id >> (i - 1)) & 1u; }
inline VertexId low_mask(int bits) { return bits <= 0 ? 0 : ((VertexId{1} << bits) - 1); }

void check_dimension(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1, got " + std::to_string(n));
  if (n > kMaxDimension) throw Error(ErrorCode::InvalidArgument, "dimension " + std::to_string(n) + " is too large");
}

// (a_{2i} a_{2i-1}) ~ (b_{2i} b_{2i-1}) for the pairs 00~00, 10~10, 01~11, 11~01,
// with each pair read as a two-bit number.
bool pair_related(unsigned a, unsigned b) {
  static constexpr unsigned kRelated[4] = {0b00, 0b11, 0b10, 0b01};
  return kRelated[a] == b;
}

int top_next_bit(Family family) { return family == Family::Mobius1 ? 1 : 0; }

}  // namespace

Bijection Bijection::identity(std::size_t size) {
  Bijection f;
  f.mapping.resize(size);
  for (std::size_t i = 0; i < size; ++i) f.mapping[i] = static_cast<VertexId>(i);
  return f;
}

bool Bijection::is_valid() const {
  std::vector<char> hit(mapping.size(), 0);
  for (VertexId t : mapping) {
    if (t >= mapping.size() || hit[t]) return false;
    hit[t] = 1;
  }
  return true;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Hypercube: return "hypercube";
    case Family::Crossed: return "crossed";
    case Family::Mobius0: return "mobius0";
    case Family::Mobius1: return "mobius1";
    case Family::LocallyTwisted: return "ltq";
    case Family::Random: return "random";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Hypercube, Family::Crossed, Family::Mobius0, Family::Mobius1, Family::LocallyTwisted,
                   Family::Random}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string bit_label(VertexId id, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (bit(id, width - i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

HLNetwork k2() {
  HLNetwork h;
  const Edge e(0, 1);
  h.graph = Graph(2, std::span<const Edge>(&e, 1), {"0", "1"});
  h.dimension = 1;
  h.f_edges = {e};
  return h;
}

HLNetwork hl_join(const HLNetwork& g1, const HLNetwork& g2, const Bijection& f) {
  if (g1.dimension != g2.dimension || g1.dimension < 1) {
    throw Error(ErrorCode::DimensionMismatch, "cannot join dimensions " + std::to_string(g1.dimension) + " and " +
                                                  std::to_string(g2.dimension));
  }
  const std::size_t half = g1.graph.vertex_count();
  if (g2.graph.vertex_count() != half || half != (std::size_t{1} << g1.dimension)) {
    throw Error(ErrorCode::DimensionMismatch, "halves do not have 2^(n-1) vertices each");
  }
  if (f.mapping.size() != half || !f.is_valid()) {
    throw Error(ErrorCode::InvalidBijection, "bijection is not a permutation of " + std::to_string(half) + " ids");
  }

  std::vector<Edge> edges;
  edges.reserve(g1.graph.edge_count() + g2.graph.edge_count() + half);
  edges.insert(edges.end(), g1.graph.edges().begin(), g1.graph.edges().end());
  const auto offset = static_cast<VertexId>(half);
  for (const Edge& e : g2.graph.edges()) edges.emplace_back(e.u + offset, e.v + offset);
  HLNetwork out;
  for (VertexId v = 0; v < half; ++v) out.f_edges.emplace_back(v, f.mapping[v] + offset);
  edges.insert(edges.end(), out.f_edges.begin(), out.f_edges.end());

  std::vector<std::string> labels;
  if (g1.graph.has_labels() && g2.graph.has_labels()) {
    labels.reserve(2 * half);
    for (const auto& l : g1.graph.labels()) labels.push_back("0" + l);
    for (const auto& l : g2.graph.labels()) labels.push_back("1" + l);
  }
  out.graph = Graph(2 * half, edges, std::move(labels));
  out.dimension = g1.dimension + 1;
  out.left = std::make_shared<const HLNetwork>(g1);
  out.right = std::make_shared<const HLNetwork>(g2);
  out.join = f;
  return out;
}

bool family_adjacent(Family family, int n, VertexId a, VertexId b) {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  const int k = std::bit_width(a ^ b);  // level of the joining edge
  if (k > n) return false;
  const int next = k < n ? static_cast<int>(bit(a, k + 1)) : top_next_bit(family);
  const VertexId mask = low_mask(k - 1);
  const VertexId al = a & mask, bl = b & mask;

  switch (family) {
    case Family::Hypercube:
      return al == bl;
    case Family::Crossed: {
      if (k % 2 == 0 && bit(a, k - 1) != bit(b, k - 1)) return false;
      for (int i = 1; i <= (k - 1) / 2; ++i) {
        unsigned pa = (bit(a, 2 * i) << 1) | bit(a, 2 * i - 1);
        unsigned pb = (bit(b, 2 * i) << 1) | bit(b, 2 * i - 1);
        if (!pair_related(pa, pb)) return false;
      }
      return true;
    }
    case Family::Mobius0:
    case Family::Mobius1:
      return next == 0 ? al == bl : bl == (~al & mask);
    case Family::LocallyTwisted:
      if (k <= 2) return al == bl;
      return (al & low_mask(k - 2)) == (bl & low_mask(k - 2)) && bit(a, k - 1) == (bit(b, k - 1) ^ bit(b, 1));
    case Family::Random:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "random networks have no adjacency rule");
}

Bijection family_bijection(Family family, int k, int next_bit) {
  check_dimension(k);
  const std::size_t size = std::size_t{1} << (k - 1);
  const VertexId mask = low_mask(k - 1);
  Bijection f;
  f.mapping.resize(size);
  for (VertexId a = 0; a < size; ++a) {
    VertexId b = a;
    switch (family) {
      case Family::Hypercube:
        break;
      case Family::Crossed:
        // 01 -> 11 and 11 -> 01: flip a_{2i} whenever a_{2i-1} is set.
        for (int i = 1; i <= (k - 1) / 2; ++i) {
          if (bit(a, 2 * i - 1)) b ^= VertexId{1} << (2 * i - 1);
        }
        break;
      case Family::Mobius0:
      case Family::Mobius1:
        if (next_bit) b = ~a & mask;
        break;
      case Family::LocallyTwisted:
        if (k >= 3 && (a & 1u)) b ^= VertexId{1} << (k - 2);
        break;
      case Family::Random:
        throw Error(ErrorCode::InvalidArgument, "random networks have no fixed bijection");
    }
    f.mapping[a] = b;
  }
  return f;
}

namespace {

HLNetwork recursive_family(Family family, int k, int next_bit) {
  if (k == 1) return k2();
  return hl_join(recursive_family(family, k - 1, 0), recursive_family(family, k - 1, 1),
                 family_bijection(family, k, next_bit));
}

}  // namespace

HLNetwork gen_family_recursive(Family family, int n) {
  check_dimension(n);
  if (family == Family::Random) throw Error(ErrorCode::InvalidArgument, "use gen_random_hl for random networks");
  return recursive_family(family, n, top_next_bit(family));
}

HLNetwork gen_family(FamilyKind kind, int n) {
  check_dimension(n);
  if (kind.family == Family::Random) return gen_random_hl(n, kind.seed);
  const std::size_t count = std::size_t{1} << n;
  std::vector<Edge> edges;
  for (VertexId a = 0; a < count; ++a) {
    for (VertexId b = a + 1; b < count; ++b) {
      if (family_adjacent(kind.family, n, a, b)) edges.emplace_back(a, b);
    }
  }
  std::vector<std::string> labels(count);
  for (VertexId v = 0; v < count; ++v) labels[v] = bit_label(v, n);
  return network_from_graph(Graph(count, edges, std::move(labels)));
}

HLNetwork gen_random_hl(int n, std::uint64_t seed) {
  check_dimension(n);
  if (n == 1) return k2();
  HLNetwork left = gen_random_hl(n - 1, mix_seed(seed, 0));
  HLNetwork right = gen_random_hl(n - 1, mix_seed(seed, 1));
  Rng rng(mix_seed(seed, 2));
  Bijection f;
  f.mapping = random_permutation(std::size_t{1} << (n - 1), rng);
  return hl_join(left, right, f);
}

HLNetwork network_from_graph(const Graph& g) {
  const std::size_t count = g.vertex_count();
  if (count < 2 || !std::has_single_bit(count)) {
    throw Error(ErrorCode::Integrity, "a hypercube-like network has 2^n vertices, got " + std::to_string(count));
  }
  HLNetwork out;
  out.graph = g;
  out.dimension = std::bit_width(count) - 1;
  if (count == 2) {
    if (g.edge_count() != 1) throw Error(ErrorCode::Integrity, "1-dimensional network must be K_2");
    out.f_edges = g.edges();
    return out;
  }

  const auto half = static_cast<VertexId>(count / 2);
  std::vector<Edge> left_edges, right_edges;
  out.join.mapping.assign(half, half);
  std::vector<char> right_hit(half, 0);
  for (const Edge& e : g.edges()) {
    if (e.v < half) {
      left_edges.push_back(e);
    } else if (e.u >= half) {
      right_edges.emplace_back(e.u - half, e.v - half);
    } else {
      if (out.join.mapping[e.u] != half || right_hit[e.v - half]) {
        throw Error(ErrorCode::Integrity, "cross edges at dimension " + std::to_string(out.dimension) +
                                              " are not a perfect matching (vertex " + std::to_string(e.u) + ")");
      }
      out.join.mapping[e.u] = e.v - half;
      right_hit[e.v - half] = 1;
      out.f_edges.push_back(e);
    }
  }
  if (out.f_edges.size() != half) {
    throw Error(ErrorCode::Integrity, "dimension " + std::to_string(out.dimension) + " has " +
                                          std::to_string(out.f_edges.size()) + " cross edges, expected " +
                                          std::to_string(half));
  }
  std::sort(out.f_edges.begin(), out.f_edges.end());

  std::vector<std::string> left_labels, right_labels;
  if (g.has_labels()) {
    for (VertexId v = 0; v < count; ++v) {
      const std::string& l = g.labels()[v];
      (v < half ? left_labels : right_labels).push_back(l.empty() ? l : l.substr(1));
    }
  }
  out.left = std::make_shared<const HLNetwork>(network_from_graph(Graph(half, left_edges, std::move(left_labels))));
  out.right = std::make_shared<const HLNetwork>(network_from_graph(Graph(half, right_edges, std::move(right_labels))));
  return out;
}

VerificationReport validate_hl(const HLNetwork& h) {
  VerificationReport r;
  r.check_name = "hl-valid";
  r.target = {{"dimension", h.dimension}};
  const int n = h.dimension;
  if (n < 1 || n > kMaxDimension) {
    r.add_check("dimension", false, "dimension " + std::to_string(n) + " outside [1," + std::to_string(kMaxDimension) + "]");
    return r;
  }
  const Graph& g = h.graph;
  const std::size_t count = std::size_t{1} << n;
  const std::size_t half = count / 2;

  r.add_check("vertex_count", g.vertex_count() == count,
              std::to_string(g.vertex_count()) + " vertices, expected " + std::to_string(count));
  r.add_check("edge_count", g.edge_count() == static_cast<std::size_t>(n) * half,
              std::to_string(g.edge_count()) + " edges, expected " + std::to_string(n * half));
  if (g.vertex_count() != count) return r;

  {
    std::string detail;
    for (VertexId v = 0; v < count && detail.empty(); ++v) {
      if (g.degree(v) != static_cast<std::size_t>(n)) {
        detail = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
      }
    }
    r.add_check("regular", detail.empty(), detail.empty() ? std::to_string(n) + "-regular" : detail);
  }
  {
    std::string detail;
    if (!g.has_labels()) detail = "no labels";
    for (VertexId v = 0; v < count && detail.empty(); ++v) {
      if (g.labels()[v] != bit_label(v, n)) detail = "vertex " + std::to_string(v) + " labelled '" + g.labels()[v] + "'";
    }
    r.add_check("labels", detail.empty(), detail.empty() ? "label value equals id; halves lead with 0 and 1" : detail);
  }
  {
    std::string detail;
    std::vector<char> covered(count, 0);
    if (h.f_edges.size() != half) detail = std::to_string(h.f_edges.size()) + " f-edges, expected " + std::to_string(half);
    for (const Edge& e : h.f_edges) {
      if (!detail.empty()) break;
      if (!g.has_edge(e.u, e.v)) {
        detail = "f-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") missing from graph";
      } else if (!(e.u < half && e.v >= half)) {
        detail = "f-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") does not cross the halves";
      } else if (covered[e.u] || covered[e.v]) {
        detail = "vertex covered twice by f-edges";
      } else {
        covered[e.u] = covered[e.v] = 1;
      }
    }
    r.add_check("f_edges_matching", detail.empty(), detail.empty() ? "perfect matching between halves" : detail);
  }
  {
    std::vector<EdgeIndex> idx;
    for (const Edge& e : h.f_edges) {
      if (auto i = g.find_edge(e.u, e.v)) idx.push_back(*i);
    }
    auto comps = components(g.without_edge_indices(idx));
    bool ok = comps.size() == 2 && comps[0].size() == half && comps[0].back() == half - 1;
    r.add_check("halves_split", ok, std::to_string(comps.size()) + " components after deleting f-edges");
  }
  {
    bool ok = n == 1 ? (!h.left && !h.right)
                     : (h.left && h.right && h.left->dimension == n - 1 && h.right->dimension == n - 1 &&
                        h.join.mapping.size() == half && h.join.is_valid());
    if (ok && n > 1) ok = hl_join(*h.left, *h.right, h.join).graph.edges() == g.edges();
    r.add_check("construction", ok, ok ? "graph equals the recorded join" : "construction record disagrees with graph");
  }
  r.add_check("connected", is_connected(g));
  if (n <= 6) {
    const std::size_t lambda = edge_connectivity(g);
    const std::size_t kappa = vertex_connectivity(g);
    r.add_check("edge_connectivity", lambda == static_cast<std::size_t>(n), "lambda = " + std::to_string(lambda));
    r.add_check("vertex_connectivity", kappa == static_cast<std::size_t>(n), "kappa = " + std::to_string(kappa));
  }
  return r;
}

nlohmann::json construction_json(const HLNetwork& h) {
  nlohmann::json j;
  j["dimension"] = h.dimension;
  if (h.dimension > 1 && h.left && h.right) {
    j["bijection"] = h.join.mapping;
    j["left"] = construction_json(*h.left);
    j["right"] = construction_json(*h.right);
  }
  return j;
}

}  // namespace hlmenger
