#include <gtest/gtest.h>

#include <set>

#include "hlmenger/edgelist.hpp"
#include "hlmenger/error.hpp"
#include "hlmenger/menger.hpp"
#include "hlmenger/random.hpp"
#include "hlmenger/report.hpp"
#include "hlmenger/verify.hpp"

using namespace hlmenger;

TEST(EdgeList, RoundTripsGeneratedNetworks) {
  for (auto kind : {FamilyKind{Family::Crossed, 0}, FamilyKind::random(42)}) {
    HLNetwork h = gen_family(kind, 5);
    EXPECT_EQ(parse_edge_list(to_edge_list(h.graph)), h.graph);
    LineGraph lg = line_graph(h);
    EXPECT_EQ(parse_edge_list(to_edge_list(lg.graph)), lg.graph);
  }
}

TEST(EdgeList, Format) {
  Graph g = build_graph(3, std::vector<Edge>{{2, 1}, {0, 1}});
  EXPECT_EQ(to_edge_list(g), "p 3 2\ne 0 1\ne 1 2\n");
}

TEST(EdgeList, AcceptsCommentsAndAnyOrder) {
  Graph g = parse_edge_list("c hello\np 3 2\ne 2 1\n\ne 1 0\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(EdgeList, Errors) {
  auto code = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Integrity;
  };
  EXPECT_EQ(code("e 0 1\n"), ErrorCode::Parse);
  EXPECT_EQ(code("p 2 1\ne 0 x\n"), ErrorCode::Parse);
  EXPECT_EQ(code("p 2 2\ne 0 1\n"), ErrorCode::Parse);
  EXPECT_EQ(code("p 2 1\ne 0 2\n"), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code("p 2 2\ne 0 1\ne 1 0\n"), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code("p 2 1\nq 0 1\n"), ErrorCode::Parse);
  try {
    parse_edge_list("p 2 1\ne 0 1\nz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Random, MixSeedSeparatesStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t k = 0; k < 64; ++k) seen.insert(mix_seed(s, k));
  EXPECT_EQ(seen.size(), 256u);
  EXPECT_EQ(mix_seed(5, 3), mix_seed(5, 3));
}

TEST(Random, PermutationAndSubset) {
  Rng rng(1);
  auto p = random_permutation(50, rng);
  std::set<std::uint32_t> s(p.begin(), p.end());
  EXPECT_EQ(s.size(), 50u);
  EXPECT_EQ(*s.rbegin(), 49u);
  auto sub = random_subset(30, 7, rng);
  EXPECT_EQ(sub.size(), 7u);
  EXPECT_TRUE(std::is_sorted(sub.begin(), sub.end()));
  EXPECT_EQ(std::set<std::uint32_t>(sub.begin(), sub.end()).size(), 7u);
}

TEST(Random, UniformBelowStaysInRange) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[uniform_below(rng, 7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Report, RoundTripWithWitness) {
  LineGraph lg = line_graph(gen_family({Family::LocallyTwisted, 0}, 4));
  VerificationReport r = verify_tightness(lg, tightness_conditional(lg), true);
  r.target = {{"family", "ltq"}, {"n", 4}};
  VerificationReport back = parse_report(serialize(r));
  EXPECT_EQ(back, r);
  EXPECT_EQ(serialize(back), serialize(r));
}

TEST(Report, RoundTripCampaign) {
  FaultCampaign c;
  c.mode = CampaignMode::Sampled;
  c.samples = 50;
  c.seed = 4;
  c.m = 3;
  VerificationReport r = run_campaign(line_graph(gen_family({Family::Hypercube, 0}, 3)), c);
  EXPECT_EQ(parse_report(serialize(r)), r);
}

TEST(Report, TimingExcludedOnRequest) {
  VerificationReport r;
  r.check_name = "x";
  r.wall_seconds = 1.5;
  EXPECT_EQ(serialize(r, false).find("wall_seconds"), std::string::npos);
  EXPECT_NE(serialize(r, true).find("wall_seconds"), std::string::npos);
}

TEST(Report, FailuresIffWitness) {
  VerificationReport r;
  r.add_check("fine", true);
  EXPECT_FALSE(r.witness);
  r.add_check("broken", false, "detail");
  EXPECT_EQ(r.counts.failures, 1u);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->note, "broken: detail");
}

TEST(Verify, DefaultsAndExitCodes) {
  VerifyTarget t;
  t.network = gen_family({Family::Hypercube, 0}, 3);
  VerifyOptions o;
  o.check = CheckKind::FtSmec;
  VerificationReport ok = run_verification(t, o);
  EXPECT_EQ(ok.parameters["m"], 2);
  EXPECT_EQ(exit_code(ok), 0);

  o.check = CheckKind::TightUncond;
  EXPECT_EQ(exit_code(run_verification(t, o)), 1);

  o.check = CheckKind::TightCond;
  VerificationReport bad = run_verification(t, o);
  EXPECT_EQ(exit_code(bad), 2);
  EXPECT_FALSE(bad.error.empty());

  o.check = CheckKind::AppendixA;
  EXPECT_EQ(exit_code(run_verification(t, o)), 2);

  o.check = CheckKind::Lemma32;
  VerificationReport lemma = run_verification(t, o);
  EXPECT_EQ(lemma.counts.visited, 55455u);
  EXPECT_EQ(lemma.parameters["floor"], 11);
}

TEST(Verify, DirectGraphNeedsM) {
  VerifyTarget t;
  t.graph = line_graph(gen_family({Family::Hypercube, 0}, 3)).graph;
  VerifyOptions o;
  o.check = CheckKind::FtSmec;
  EXPECT_EQ(exit_code(run_verification(t, o)), 2);
  o.m = 1;
  EXPECT_EQ(exit_code(run_verification(t, o)), 0);
  o.check = CheckKind::Lemma32;
  EXPECT_EQ(exit_code(run_verification(t, o)), 2);
}

TEST(Verify, CheckNames) {
  for (auto k : {CheckKind::Smec, CheckKind::FtSmec, CheckKind::CondFtSmec, CheckKind::Lemma32, CheckKind::Lemma41,
                 CheckKind::AppendixA, CheckKind::TightUncond, CheckKind::TightCond, CheckKind::HlValid,
                 CheckKind::Prop31, CheckKind::Bcdc}) {
    EXPECT_EQ(parse_check(check_name(k)), k);
  }
  EXPECT_EQ(parse_check("nope"), std::nullopt);
}
