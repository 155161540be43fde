#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlmenger/graph.hpp"
#include "hlmenger/line_graph.hpp"
#include "hlmenger/report.hpp"

namespace hlmenger {

// Strong Menger edge connectivity verdict. A failing verdict always carries a
// witness with pair, path_count < required and a cut of size path_count that
// separates the pair.
struct SmecVerdict {
  bool holds = true;
  std::optional<Witness> witness;
};

// Pairs are examined in ascending lexicographic (u, v), u < v; the witness is
// the first violating pair in that order. All pair values come from a
// Gomory-Hu tree (|V|-1 max-flows); the witness cut is recomputed directly.
SmecVerdict is_smec(const Graph& g);

// Same verdict and witness, one bounded max-flow per pair.
SmecVerdict is_smec_pairwise(const Graph& g);

enum class CampaignMode { Exhaustive, Sampled };
enum class SizePolicy { UpToM, ExactlyM };

inline constexpr std::uint64_t kDefaultCampaignBudget = 10'000'000;

struct FaultCampaign {
  CampaignMode mode = CampaignMode::Exhaustive;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  bool conditional = false;  // only fault sets with δ(G−F) ≥ 2 are checked
  SizePolicy sizes = SizePolicy::UpToM;
  bool adversarial = false;
  std::uint64_t budget = kDefaultCampaignBudget;  // exhaustive fault-set cap
  unsigned jobs = 1;
  // Redraws allowed for one conditional sample before giving up.
  std::uint64_t max_redraws = 1'000'000;
};

// Predicate over one fault set (edge indices into `host`, sorted). Returns a
// witness on failure. Must be safe to call concurrently.
using FaultCheck = std::function<std::optional<Witness>(const Graph& host, std::span<const EdgeIndex> faults)>;

// Generic fault-injection driver. Visits every fault set the campaign
// describes (then `extra_sets`, e.g. the adversarial suite), filters by the
// conditional predicate, and runs `check` on the rest. Exhaustive mode visits
// each canonical set with |F| ≤ m exactly once, in size-then-lexicographic
// order. Sampled mode draws sample i from its own stream mix(seed, i): with
// probability 4/5 |F| = m, otherwise |F| uniform in [0, m), and conditional
// rejects are redrawn within the same stream. Results do not depend on jobs.
// Throws BudgetExceeded / InvalidArgument before doing any work.
VerificationReport run_fault_campaign(const Graph& host, const FaultCampaign& c,
                                      std::span<const std::vector<EdgeIndex>> extra_sets, const FaultCheck& check);

// is_smec on L − F for every visited F. With c.adversarial the adversarial
// suite for budget c.m is appended.
VerificationReport run_campaign(const LineGraph& lg, const FaultCampaign& c);
VerificationReport run_campaign(const Graph& g, const FaultCampaign& c);

// largest_component_size(L − S) ≥ floor for every visited S, |S| ≤ fault_budget
// (fault_budget replaces c.m).
VerificationReport check_component_lemma(const LineGraph& lg, std::size_t fault_budget, std::size_t floor,
                                         const FaultCampaign& c);

// Deterministic stress sets mirroring the extremal cases of the giant
// component arguments, each of size ≤ budget, deduplicated, starting with ∅.
std::vector<FaultSet> adversarial_fault_sets(const LineGraph& lg, std::size_t budget);
std::vector<std::vector<EdgeIndex>> adversarial_index_sets(const LineGraph& lg, std::size_t budget);

struct TightnessWitness {
  FaultSet fault_set;
  VertexId u = 0;
  VertexId v = 0;
  std::size_t expected_max_paths = 0;  // 2n - 3
  std::size_t required = 0;            // 2n - 2
  // Conditional construction: the pendant path u - {u1, u2} - u3.
  std::optional<std::array<VertexId, 3>> chain;
  // Unconditional construction: the vertex whose other edges are removed.
  std::optional<VertexId> u0;
  // Every v the construction allows, lowest first (v is candidates.front()).
  std::vector<VertexId> candidates;
};

// S = E(u0, N(u0) \ {u}) with u0 the lowest id, u its lowest neighbor and v
// the lowest vertex outside N[u0]. |S| = 2n − 3. Needs n ≥ 3.
TightnessWitness tightness_unconditional(const LineGraph& lg);

// u, u1, u2 the three lowest line vertices at the lowest base vertex of
// degree ≥ 3, u3 the lowest neighbor of u2 outside {u, u1},
// S = E[u2, V∖{u,u1,u3}] ∪ E[u1, V∖{u,u2}], v the lowest vertex outside
// N[{u,u1,u2}]. |S| = 4n − 9. Needs n ≥ 4.
TightnessWitness tightness_conditional(const LineGraph& lg);

// Runs max-flow on L − S for the witness pair (or every candidate v when
// all_candidates). failures counts confirmed violations; structural facts
// (sizes, degrees, δ, certificate) are recorded as check entries.
VerificationReport verify_tightness(const LineGraph& lg, const TightnessWitness& w, bool all_candidates = false);

struct FaultPartition {
  std::vector<Edge> s1;  // inside L(Q^1_{n-1})
  std::vector<Edge> s2;  // inside L(Q^2_{n-1})
  std::vector<Edge> sf;  // incident to an f-vertex
};

// Throws ForeignEdge if S is not hosted by L, InvalidArgument without F_n.
FaultPartition partition_faults(const LineGraph& lg, const FaultSet& s);

}  // namespace hlmenger
