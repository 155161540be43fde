#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hlmenger/menger.hpp"
#include "hlmenger/report.hpp"
#include "hlmenger/topology.hpp"

namespace hlmenger {

enum class CheckKind {
  Smec,
  FtSmec,
  CondFtSmec,
  Lemma32,
  Lemma41,
  AppendixA,
  TightUncond,
  TightCond,
  HlValid,
  Prop31,
  Bcdc,
};

// smec, ft-smec, cond-ft-smec, lemma32, lemma41, appendixA, tight-uncond,
// tight-cond, hl-valid, prop31, bcdc.
std::string_view check_name(CheckKind k);
std::optional<CheckKind> parse_check(std::string_view name);

struct VerifyOptions {
  CheckKind check = CheckKind::Smec;
  std::optional<std::size_t> m;       // fault size; per-check default when unset
  std::optional<std::size_t> floor;   // component lemmas only
  std::optional<std::size_t> budget;  // component lemmas: |S| bound
  CampaignMode mode = CampaignMode::Exhaustive;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  bool adversarial = false;
  bool all_witnesses = false;  // tightness: examine every candidate v
  std::uint64_t enumeration_budget = kDefaultCampaignBudget;
  unsigned jobs = 1;
};

// Either an HL network (checks run on its line graph) or, for the smec
// checks only, a plain graph verified as given.
struct VerifyTarget {
  std::optional<HLNetwork> network;
  std::optional<Graph> graph;
  nlohmann::json description = nlohmann::json::object();
};

// Never throws: library errors land in report.error.
VerificationReport run_verification(const VerifyTarget& target, const VerifyOptions& options);

// 0 pass, 1 counterexample, 2 error.
int exit_code(const VerificationReport& r);

}  // namespace hlmenger
