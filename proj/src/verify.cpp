#include "hlmenger/verify.hpp"

#include <array>
#include <chrono>
#include <string>
#include <utility>

#include "hlmenger/error.hpp"

namespace hlmenger {

namespace {

constexpr std::array<std::pair<CheckKind, std::string_view>, 11> kChecks{{
    {CheckKind::Smec, "smec"},
    {CheckKind::FtSmec, "ft-smec"},
    {CheckKind::CondFtSmec, "cond-ft-smec"},
    {CheckKind::Lemma32, "lemma32"},
    {CheckKind::Lemma41, "lemma41"},
    {CheckKind::AppendixA, "appendixA"},
    {CheckKind::TightUncond, "tight-uncond"},
    {CheckKind::TightCond, "tight-cond"},
    {CheckKind::HlValid, "hl-valid"},
    {CheckKind::Prop31, "prop31"},
    {CheckKind::Bcdc, "bcdc"},
}};

std::size_t sub_floor(std::size_t a, std::size_t b) { return a > b ? a - b : 0; }

void need_dimension(int n, int min_n, std::string_view check) {
  if (n < min_n) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(check) + " needs n >= " + std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

FaultCampaign campaign_from(const VerifyOptions& o) {
  FaultCampaign c;
  c.mode = o.mode;
  c.samples = o.samples;
  c.seed = o.seed;
  c.adversarial = o.adversarial;
  c.budget = o.enumeration_budget;
  c.jobs = o.jobs;
  return c;
}

VerificationReport single_smec(const Graph& g) {
  VerificationReport r;
  SmecVerdict verdict = is_smec(g);
  r.counts.visited = r.counts.checked = 1;
  if (!verdict.holds) {
    r.counts.failures = 1;
    r.witness = std::move(verdict.witness);
  }
  r.parameters = {{"pair_order", "lexicographic"}};
  return r;
}

VerificationReport run_direct(const Graph& g, const VerifyOptions& o) {
  if (o.check == CheckKind::Smec) return single_smec(g);
  if (o.check != CheckKind::FtSmec && o.check != CheckKind::CondFtSmec) {
    throw Error(ErrorCode::InvalidArgument, std::string(check_name(o.check)) + " needs an HL network target");
  }
  if (!o.m) throw Error(ErrorCode::InvalidArgument, "a plain graph target needs an explicit fault size m");
  FaultCampaign c = campaign_from(o);
  c.m = *o.m;
  c.conditional = o.check == CheckKind::CondFtSmec;
  return run_campaign(g, c);
}

VerificationReport component_lemma(const LineGraph& lg, const VerifyOptions& o, std::size_t budget,
                                   std::size_t floor) {
  const std::size_t b = o.budget.value_or(o.m.value_or(budget));
  VerificationReport r = check_component_lemma(lg, b, o.floor.value_or(floor), campaign_from(o));
  r.parameters["fault_budget"] = b;
  return r;
}

VerificationReport run_network(const HLNetwork& h, const VerifyOptions& o) {
  const int n = h.dimension;
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t vertices = nn << (n - 1);
  switch (o.check) {
    case CheckKind::HlValid: return validate_hl(h);
    case CheckKind::Prop31: return check_prop_3_1(h);
    case CheckKind::Bcdc: return check_bcdc(bcdc(n));
    default: break;
  }
  const LineGraph lg = line_graph(h);
  switch (o.check) {
    case CheckKind::Smec: return single_smec(lg.graph);
    case CheckKind::FtSmec:
    case CheckKind::CondFtSmec: {
      FaultCampaign c = campaign_from(o);
      c.conditional = o.check == CheckKind::CondFtSmec;
      c.m = o.m.value_or(c.conditional ? sub_floor(4 * nn, 10) : sub_floor(2 * nn, 4));
      return run_campaign(lg, c);
    }
    case CheckKind::Lemma32:
      need_dimension(n, 3, "lemma32");
      return component_lemma(lg, o, 4 * nn - 7, vertices - 1);
    case CheckKind::Lemma41:
      need_dimension(n, 4, "lemma41");
      return component_lemma(lg, o, 6 * nn - 13, vertices - 2);
    case CheckKind::AppendixA:
      if (n != 4) throw Error(ErrorCode::InvalidArgument, "appendixA is stated for n = 4 only");
      return component_lemma(lg, o, 11, 30);
    case CheckKind::TightUncond: return verify_tightness(lg, tightness_unconditional(lg), o.all_witnesses);
    case CheckKind::TightCond: return verify_tightness(lg, tightness_conditional(lg), o.all_witnesses);
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unhandled check");
}

}  // namespace

std::string_view check_name(CheckKind k) {
  for (const auto& [kind, name] : kChecks) {
    if (kind == k) return name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (const auto& [kind, n] : kChecks) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

VerificationReport run_verification(const VerifyTarget& target, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    if (target.network) {
      r = run_network(*target.network, options);
    } else if (target.graph) {
      r = run_direct(*target.graph, options);
    } else {
      throw Error(ErrorCode::InvalidArgument, "no verification target");
    }
  } catch (const Error& e) {
    r = VerificationReport{};
    r.error = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    r = VerificationReport{};
    r.error = e.what();
  }
  r.check_name = check_name(options.check);
  r.target = target.description;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_code(const VerificationReport& r) {
  if (!r.error.empty()) return 2;
  return r.counts.failures == 0 ? 0 : 1;
}

}  // namespace hlmenger
