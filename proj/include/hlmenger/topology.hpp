#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlmenger/graph.hpp"
#include "hlmenger/report.hpp"

namespace hlmenger {

// f : V(G1) -> V(G2) on local ids [0, 2^{n-1}).
struct Bijection {
  std::vector<VertexId> mapping;

  static Bijection identity(std::size_t size);
  bool is_valid() const;

  friend bool operator==(const Bijection&, const Bijection&) = default;
};

enum class Family { Hypercube, Crossed, Mobius0, Mobius1, LocallyTwisted, Random };

struct FamilyKind {
  Family family = Family::Hypercube;
  std::uint64_t seed = 0;  // only meaningful for Random

  static FamilyKind random(std::uint64_t seed) { return {Family::Random, seed}; }
  friend bool operator==(const FamilyKind&, const FamilyKind&) = default;
};

std::string_view family_name(Family f);
// Accepts hypercube, crossed, mobius0, mobius1, ltq, random.
std::optional<Family> parse_family(std::string_view name);

// An n-dimensional hypercube-like network with the record of how it was put
// together. Vertex ids equal the integer value of the label a_n...a_1, so the
// left half (leading bit 0) is [0, 2^{n-1}) and the right half the rest.
//
// Fields are public so callers can inspect or tamper with a copy; the
// generators below are the only producers that guarantee the invariants, and
// validate_hl() checks them.
struct HLNetwork {
  Graph graph;
  int dimension = 0;
  std::shared_ptr<const HLNetwork> left;   // Q^1_{n-1}, null for n = 1
  std::shared_ptr<const HLNetwork> right;  // Q^2_{n-1}, null for n = 1
  Bijection join;                          // empty for n = 1
  std::vector<Edge> f_edges;               // (v, 2^{n-1} + f(v)), sorted

  std::size_t half() const { return dimension >= 1 ? std::size_t{1} << (dimension - 1) : 0; }
};

HLNetwork k2();

// Throws DimensionMismatch or InvalidBijection.
HLNetwork hl_join(const HLNetwork& g1, const HLNetwork& g2, const Bijection& f);

// Named families come straight from their adjacency rules over {0,1}^n;
// Random dispatches to gen_random_hl. Throws InvalidArgument for n = 0.
HLNetwork gen_family(FamilyKind kind, int n);

// The same named families assembled by iterated hl_join with the per-level
// bijection each rule induces. Used to cross-check gen_family.
HLNetwork gen_family_recursive(Family family, int n);

// The bijection the named family uses when joining two (k-1)-dimensional
// halves; `next_bit` is the label bit just above level k (the Möbius variants
// depend on it; at the top level it is 0 for mobius0 and 1 for mobius1).
Bijection family_bijection(Family family, int k, int next_bit);

// Rule-direct adjacency test for two ids of an n-dimensional named family.
bool family_adjacent(Family family, int n, VertexId a, VertexId b);

// Recursive random network: halves built from mix(seed,0) and mix(seed,1),
// joined by a uniform bijection drawn from mix(seed,2).
HLNetwork gen_random_hl(int n, std::uint64_t seed);

// Rebuilds the construction record of a coded graph on 2^n vertices by
// splitting on the leading label bit at every level. Throws Integrity when the
// cross edges at some level do not form a perfect matching.
HLNetwork network_from_graph(const Graph& g);

// Bit-string label of `id` with `width` bits, most significant first.
std::string bit_label(VertexId id, int width);

VerificationReport validate_hl(const HLNetwork& h);

// Per-level bijection arrays as JSON: {dimension, bijection, left, right}.
nlohmann::json construction_json(const HLNetwork& h);

}  // namespace hlmenger
