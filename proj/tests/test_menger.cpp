#include <gtest/gtest.h>

#include <algorithm>
#include <mutex>
#include <random>

#include "hlmenger/error.hpp"
#include "hlmenger/menger.hpp"
#include "hlmenger/random.hpp"
#include "oracles.hpp"

using namespace hlmenger;

namespace {

LineGraph lq(Family f, int n) { return line_graph(gen_family({f, 0}, n)); }

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return build_graph(n, e);
}

// SMEC straight from the definition, using the subset-enumeration cut oracle.
bool smec_oracle(const Graph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (oracle::min_edge_cut(g.vertex_count(), g.edges(), u, v) < std::min(g.degree(u), g.degree(v))) return false;
  return true;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Integrity;
}

}  // namespace

TEST(IsSmec, Examples) {
  EXPECT_TRUE(is_smec(lq(Family::Hypercube, 3).graph).holds);
  EXPECT_TRUE(is_smec(complete(4)).holds);
}

TEST(IsSmec, FigureThreeFaultSetFails) {
  LineGraph lg = lq(Family::Hypercube, 3);
  TightnessWitness w = tightness_unconditional(lg);
  SmecVerdict v = is_smec(remove_edges(lg.graph, w.fault_set));
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(w.fault_set.size(), 3u);
  EXPECT_LT(*v.witness->path_count, *v.witness->required);
}

TEST(IsSmec, DisconnectedGraphFails) {
  Graph g = build_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  SmecVerdict v = is_smec(g);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->pair, std::make_pair(VertexId{0}, VertexId{3}));
  EXPECT_EQ(v.witness->path_count, 0u);
  EXPECT_EQ(v.witness->required, 2u);
}

TEST(IsSmec, IsolatedVerticesDemandNothing) {
  Graph g = build_graph(4, std::vector<Edge>{{0, 1}});
  EXPECT_TRUE(is_smec(g).holds);
}

TEST(IsSmec, GomoryHuAgreesWithPairwiseAndOracle) {
  std::mt19937_64 rng(314);
  int failures_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + trial % 5;
    auto edges = oracle::random_graph(n, std::min<std::size_t>(n * (n - 1) / 2, n + trial % 9), rng);
    Graph g = build_graph(n, edges);
    SmecVerdict a = is_smec(g);
    SmecVerdict b = is_smec_pairwise(g);
    ASSERT_EQ(a.holds, b.holds);
    EXPECT_EQ(a.witness, b.witness);
    if (g.edge_count() <= 16) EXPECT_EQ(a.holds, smec_oracle(g));
    if (!a.holds) {
      ++failures_seen;
      const Witness& w = *a.witness;
      EXPECT_EQ(w.cut.size(), *w.path_count);
      EXPECT_TRUE(separates(g, w.cut, w.pair->first, w.pair->second));
    }
  }
  EXPECT_GT(failures_seen, 10);
}

TEST(Campaign, ExhaustiveQ3CountsAndPasses) {
  for (Family f : {Family::Hypercube, Family::Crossed, Family::LocallyTwisted}) {
    FaultCampaign c;
    c.m = 2;
    VerificationReport r = run_campaign(lq(f, 3), c);
    EXPECT_EQ(r.counts.visited, 301u);
    EXPECT_EQ(r.counts.checked, 301u);
    EXPECT_EQ(r.counts.failures, 0u);
    EXPECT_FALSE(r.witness);
  }
}

TEST(Campaign, ZeroFaultsIsSingleSmecCheck) {
  FaultCampaign c;
  c.m = 0;
  LineGraph lg = lq(Family::Mobius0, 4);
  VerificationReport r = run_campaign(lg, c);
  EXPECT_EQ(r.counts.checked, 1u);
  EXPECT_EQ(r.passed(), is_smec(lg.graph).holds);
}

TEST(Campaign, ExhaustiveEnumeratesEachSetOnce) {
  Graph g = complete(5);
  std::mutex lock;
  std::set<std::vector<EdgeIndex>> seen;
  std::size_t calls = 0;
  FaultCheck record = [&](const Graph&, std::span<const EdgeIndex> f) -> std::optional<Witness> {
    std::lock_guard<std::mutex> guard(lock);
    ++calls;
    seen.insert(std::vector<EdgeIndex>(f.begin(), f.end()));
    return std::nullopt;
  };
  FaultCampaign c;
  c.m = 3;
  c.jobs = 3;
  VerificationReport r = run_fault_campaign(g, c, {}, record);
  EXPECT_EQ(calls, subsets_up_to(10, 3));
  EXPECT_EQ(seen.size(), calls);
  EXPECT_EQ(r.counts.visited, calls);
}

TEST(Campaign, ExactlyMPolicy) {
  FaultCampaign c;
  c.m = 2;
  c.sizes = SizePolicy::ExactlyM;
  VerificationReport r = run_fault_campaign(complete(5), c, {}, [](const Graph&, std::span<const EdgeIndex> f) {
    EXPECT_EQ(f.size(), 2u);
    return std::optional<Witness>{};
  });
  EXPECT_EQ(r.counts.visited, 45u);
}

TEST(Campaign, ConditionalFilterIsExact) {
  LineGraph lg = lq(Family::Hypercube, 3);
  FaultCampaign c;
  c.m = 3;
  c.conditional = true;
  std::mutex lock;
  std::size_t bad = 0;
  VerificationReport r = run_fault_campaign(lg.graph, c, {}, [&](const Graph& host, std::span<const EdgeIndex> f) {
    std::lock_guard<std::mutex> guard(lock);
    if (min_degree(host.without_edge_indices(f)) < 2) ++bad;
    return std::optional<Witness>{};
  });
  EXPECT_EQ(bad, 0u);
  std::uint64_t expected_skips = 0;
  const std::size_t m = lg.graph.edge_count();
  for (EdgeIndex a = 0; a < m; ++a) {
    for (EdgeIndex b = a + 1; b < m; ++b) {
      for (EdgeIndex d = b + 1; d < m; ++d) {
        std::vector<EdgeIndex> f{a, b, d};
        if (min_degree(lg.graph.without_edge_indices(f)) <= 1) ++expected_skips;
      }
    }
  }
  EXPECT_EQ(r.counts.skipped_conditional, expected_skips);
  EXPECT_EQ(r.counts.visited, subsets_up_to(m, 3));
  EXPECT_EQ(r.counts.checked + r.counts.skipped_conditional, r.counts.visited);
}

TEST(Campaign, SampledConditionalQ4Passes) {
  FaultCampaign c;
  c.mode = CampaignMode::Sampled;
  c.samples = 1500;
  c.seed = 1;
  c.m = 6;
  c.conditional = true;
  VerificationReport r = run_campaign(lq(Family::Crossed, 4), c);
  EXPECT_EQ(r.counts.checked, 1500u);
  EXPECT_EQ(r.counts.failures, 0u);
  EXPECT_EQ(r.parameters["rng"], kRngName);
}

TEST(Campaign, SampledSizesFollowPolicy) {
  FaultCampaign c;
  c.mode = CampaignMode::Sampled;
  c.samples = 5000;
  c.seed = 8;
  c.m = 7;
  std::mutex lock;
  std::size_t full = 0, smaller = 0;
  run_fault_campaign(complete(8), c, {}, [&](const Graph&, std::span<const EdgeIndex> f) {
    std::lock_guard<std::mutex> guard(lock);
    EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
    EXPECT_LE(f.size(), 7u);
    (f.size() == 7 ? full : smaller) += 1;
    return std::optional<Witness>{};
  });
  EXPECT_NEAR(static_cast<double>(full) / 5000.0, 0.8, 0.03);
  EXPECT_GT(smaller, 0u);
}

TEST(Campaign, ResultIndependentOfJobs) {
  LineGraph lg = lq(Family::Mobius1, 4);
  FaultCampaign c;
  c.mode = CampaignMode::Sampled;
  c.samples = 600;
  c.seed = 77;
  c.m = 8;
  c.conditional = true;
  c.adversarial = true;
  c.jobs = 1;
  const std::string one = serialize(run_campaign(lg, c), false);
  c.jobs = 4;
  EXPECT_EQ(serialize(run_campaign(lg, c), false), one);
}

TEST(Campaign, FirstFailureIsLowestOrdinal) {
  Graph g = complete(6);
  FaultCampaign c;
  c.m = 2;
  c.jobs = 4;
  VerificationReport r = run_fault_campaign(g, c, {}, [](const Graph&, std::span<const EdgeIndex> f) {
    if (f.size() == 2 && f[0] >= 3) {
      Witness w;
      w.note = std::to_string(f[0]) + "," + std::to_string(f[1]);
      return std::optional<Witness>(w);
    }
    return std::optional<Witness>{};
  });
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->note, "3,4");
  EXPECT_EQ(r.witness->fault_edges.size(), 2u);
}

TEST(Campaign, Guards) {
  LineGraph lg = lq(Family::Hypercube, 4);
  FaultCampaign c;
  c.m = 6;
  EXPECT_EQ(code_of([&] { run_campaign(lg, c); }), ErrorCode::BudgetExceeded);
  c.m = 1000;
  EXPECT_EQ(code_of([&] { run_campaign(lg, c); }), ErrorCode::InvalidArgument);
}

TEST(ComponentLemma, ExhaustiveQ3) {
  FaultCampaign c;
  VerificationReport r = check_component_lemma(lq(Family::Crossed, 3), 5, 11, c);
  EXPECT_EQ(r.counts.visited, 55455u);
  EXPECT_EQ(r.counts.failures, 0u);
}

TEST(ComponentLemma, NoFaultsFullSize) {
  FaultCampaign c;
  VerificationReport r = check_component_lemma(lq(Family::Hypercube, 3), 0, 12, c);
  EXPECT_EQ(r.counts.checked, 1u);
  EXPECT_TRUE(r.passed());
}

TEST(ComponentLemma, FloorAboveBoundFindsCounterexample) {
  FaultCampaign c;
  VerificationReport r = check_component_lemma(lq(Family::Hypercube, 3), 4, 12, c);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.witness->largest_component, 11u);
  EXPECT_EQ(r.witness->fault_edges.size(), 4u);
}

TEST(ComponentLemma, FloorAboveVertexCountRejected) {
  FaultCampaign c;
  EXPECT_EQ(code_of([&] { check_component_lemma(lq(Family::Hypercube, 3), 1, 13, c); }),
            ErrorCode::InvalidArgument);
}

TEST(ComponentLemma, SampledWithAdversarialQ4) {
  FaultCampaign c;
  c.mode = CampaignMode::Sampled;
  c.samples = 5000;
  c.seed = 3;
  c.adversarial = true;
  for (Family f : {Family::Hypercube, Family::LocallyTwisted}) {
    LineGraph lg = lq(f, 4);
    EXPECT_TRUE(check_component_lemma(lg, 11, 30, c).passed());
    EXPECT_TRUE(check_component_lemma(lg, 9, 31, c).passed());
  }
}

TEST(Adversarial, BudgetZeroIsEmptySetOnly) {
  auto sets = adversarial_fault_sets(lq(Family::Hypercube, 3), 0);
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_TRUE(sets[0].empty());
}

TEST(Adversarial, ContainsFigureThreeSets) {
  LineGraph lg = lq(Family::Hypercube, 3);
  auto sets = adversarial_fault_sets(lg, 3);
  std::set<std::vector<Edge>> have;
  for (const auto& s : sets) {
    EXPECT_LE(s.size(), 3u);
    have.insert(s.edges());
  }
  EXPECT_EQ(have.size(), sets.size());
  for (VertexId u0 = 0; u0 < lg.graph.vertex_count(); ++u0) {
    for (const auto& keep : lg.graph.incident(u0)) {
      std::vector<Edge> s;
      for (const auto& inc : lg.graph.incident(u0))
        if (inc.neighbor != keep.neighbor) s.emplace_back(u0, inc.neighbor);
      std::sort(s.begin(), s.end());
      EXPECT_TRUE(have.count(s)) << "u0=" << u0 << " u=" << keep.neighbor;
    }
  }
}

TEST(Adversarial, ContainsFigureFourConstruction) {
  LineGraph lg = lq(Family::Hypercube, 4);
  auto sets = adversarial_fault_sets(lg, 7);
  TightnessWitness w = tightness_conditional(lg);
  EXPECT_NE(std::find(sets.begin(), sets.end(), w.fault_set), sets.end());
}

TEST(Tightness, UnconditionalAcrossFamilies) {
  for (Family f : {Family::Hypercube, Family::Crossed, Family::Mobius0, Family::Mobius1, Family::LocallyTwisted}) {
    for (int n = 3; n <= 5; ++n) {
      LineGraph lg = lq(f, n);
      TightnessWitness w = tightness_unconditional(lg);
      EXPECT_EQ(w.fault_set.size(), static_cast<std::size_t>(2 * n - 3));
      Graph reduced = remove_edges(lg.graph, w.fault_set);
      const std::size_t paths = max_edge_disjoint_paths(reduced, w.u, w.v).value;
      EXPECT_LE(paths, static_cast<std::size_t>(2 * n - 3));
      EXPECT_LT(paths, std::min(reduced.degree(w.u), reduced.degree(w.v)));
      VerificationReport r = verify_tightness(lg, w);
      EXPECT_TRUE(r.error.empty()) << r.error;
      EXPECT_EQ(r.counts.failures, 1u);
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(separates(reduced, r.witness->cut, w.u, w.v));
    }
  }
}

TEST(Tightness, ConditionalAcrossFamilies) {
  for (Family f : {Family::Hypercube, Family::Crossed, Family::Mobius0, Family::Mobius1, Family::LocallyTwisted}) {
    for (int n = 4; n <= 5; ++n) {
      LineGraph lg = lq(f, n);
      TightnessWitness w = tightness_conditional(lg);
      EXPECT_EQ(w.fault_set.size(), static_cast<std::size_t>(4 * n - 9));
      Graph reduced = remove_edges(lg.graph, w.fault_set);
      EXPECT_GE(min_degree(reduced), 2u);
      EXPECT_EQ(reduced.degree((*w.chain)[0]), 2u);
      EXPECT_EQ(reduced.degree((*w.chain)[1]), 3u);
      EXPECT_LE(max_edge_disjoint_paths(reduced, w.u, w.v).value, static_cast<std::size_t>(2 * n - 3));
      VerificationReport r = verify_tightness(lg, w);
      EXPECT_TRUE(r.error.empty()) << r.error;
      EXPECT_EQ(r.counts.failures, 1u);
    }
  }
}

TEST(Tightness, AllCandidatesReported) {
  LineGraph lg = lq(Family::Crossed, 4);
  TightnessWitness w = tightness_unconditional(lg);
  VerificationReport r = verify_tightness(lg, w, true);
  EXPECT_EQ(r.counts.checked, w.candidates.size());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->extra["per_v"].size(), w.candidates.size());
}

TEST(Tightness, DimensionGuards) {
  EXPECT_EQ(code_of([] { tightness_unconditional(lq(Family::Hypercube, 2)); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { tightness_conditional(lq(Family::Hypercube, 3)); }), ErrorCode::InvalidArgument);
}

TEST(Partition, Examples) {
  LineGraph lg = lq(Family::Hypercube, 4);
  const VertexId f = lg.f_vertices.front();
  std::vector<Edge> at_f;
  for (const auto& inc : lg.graph.incident(f)) at_f.emplace_back(f, inc.neighbor);
  FaultPartition p = partition_faults(lg, FaultSet(lg.graph, at_f));
  EXPECT_TRUE(p.s1.empty());
  EXPECT_TRUE(p.s2.empty());
  EXPECT_EQ(p.sf.size(), 6u);

  for (const Edge& e : lg.graph.edges()) {
    if (!lg.is_f_vertex(e.u) && !lg.is_f_vertex(e.v) && lg.parts[e.u] == LinePart::Left) {
      FaultPartition one = partition_faults(lg, FaultSet(lg.graph, {e}));
      EXPECT_EQ(one.s1.size(), 1u);
      break;
    }
  }

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto idx = random_subset(lg.graph.edge_count(), 11, rng);
    FaultSet s = FaultSet::from_indices(lg.graph, std::vector<EdgeIndex>(idx.begin(), idx.end()));
    FaultPartition q = partition_faults(lg, s);
    EXPECT_EQ(q.s1.size() + q.s2.size() + q.sf.size(), 11u);
  }
}

TEST(Partition, RequiresNetworkLineGraph) {
  LineGraph plain = line_graph(build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(code_of([&] { partition_faults(plain, FaultSet()); }), ErrorCode::InvalidArgument);
}
