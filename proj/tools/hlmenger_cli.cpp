// hlmenger: generate hypercube-like networks and their line graphs, and
// verify fault-tolerant Menger properties. Links only the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hlmenger/hlmenger.h"
#include "json.hpp"

namespace {

constexpr int kExitError = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphDeleter {
  void operator()(hlm_graph* g) const { hlm_graph_free(g); }
};
struct NetworkDeleter {
  void operator()(hlm_network* h) const { hlm_network_free(h); }
};
struct LineGraphDeleter {
  void operator()(hlm_line_graph* lg) const { hlm_line_graph_free(lg); }
};
using GraphPtr = std::unique_ptr<hlm_graph, GraphDeleter>;
using NetworkPtr = std::unique_ptr<hlm_network, NetworkDeleter>;
using LineGraphPtr = std::unique_ptr<hlm_line_graph, LineGraphDeleter>;

void check(hlm_status s) {
  if (s != HLM_OK) throw CliError(std::string(hlm_status_string(s)) + ": " + hlm_last_error());
}

std::string take(char* s) {
  std::string out(s);
  hlm_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write " + path);
  out << text;
}

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string edge_list(const hlm_graph* g) {
  char* text = nullptr;
  check(hlm_graph_to_edgelist(g, &text));
  return take(text);
}

GraphPtr parse_graph(const std::string& text) {
  hlm_graph* g = nullptr;
  check(hlm_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

NetworkPtr generate(const std::string& family, int n, std::uint64_t seed) {
  hlm_network* h = nullptr;
  check(hlm_network_generate(family.c_str(), n, seed, &h));
  return NetworkPtr(h);
}

GraphPtr network_graph(const hlm_network* h) {
  hlm_graph* g = nullptr;
  check(hlm_network_graph(h, &g));
  return GraphPtr(g);
}

GraphPtr line_graph_graph(const hlm_line_graph* lg) {
  hlm_graph* g = nullptr;
  check(hlm_line_graph_graph(lg, &g));
  return GraphPtr(g);
}

std::string provenance(const hlm_line_graph* lg) {
  char* text = nullptr;
  check(hlm_line_graph_provenance_json(lg, &text));
  return take(text);
}

struct GenArgs {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string construction;
};

int cmd_gen(const GenArgs& a) {
  NetworkPtr h = generate(a.family, a.n, a.seed);
  write_to(a.out, edge_list(network_graph(h.get()).get()));
  if (!a.construction.empty()) {
    char* text = nullptr;
    check(hlm_network_construction_json(h.get(), &text));
    write_to(a.construction, take(text));
  }
  return 0;
}

struct BcdcArgs {
  int n = 0;
  std::string original;
  std::string logical;
  std::string provenance;
};

int cmd_bcdc(const BcdcArgs& a) {
  hlm_graph* original = nullptr;
  hlm_line_graph* logical = nullptr;
  check(hlm_bcdc_create(a.n, &original, &logical));
  GraphPtr a_n(original);
  LineGraphPtr b_n(logical);
  const std::string a_text = edge_list(a_n.get());
  const std::string b_text = edge_list(line_graph_graph(b_n.get()).get());
  if (a.original.empty() && a.logical.empty()) {
    std::cout << "c original A_" << a.n << '\n' << a_text << "c logical B_" << a.n << '\n' << b_text;
  } else {
    if (!a.original.empty()) write_to(a.original, a_text);
    if (!a.logical.empty()) write_to(a.logical, b_text);
  }
  if (!a.provenance.empty()) write_to(a.provenance, provenance(b_n.get()));
  return 0;
}

struct LineArgs {
  std::string in;
  std::string out;
  std::string provenance;
  bool bcdc = false;
  int n = 0;
  std::string original;
};

int cmd_linegraph(const LineArgs& a) {
  if (a.bcdc) {
    if (a.n == 0) throw CliError("--bcdc needs --n");
    return cmd_bcdc({a.n, a.original, a.out, a.provenance});
  }
  if (a.in.empty()) throw CliError("linegraph needs --in or --bcdc");
  GraphPtr base = parse_graph(read_file(a.in));
  // Coded HL networks keep their f-vertices; anything else is a plain line graph.
  hlm_network* h = nullptr;
  hlm_line_graph* lg = nullptr;
  if (hlm_network_from_graph(base.get(), &h) == HLM_OK) {
    NetworkPtr owner(h);
    check(hlm_line_graph_from_network(h, &lg));
  } else {
    check(hlm_line_graph_create(base.get(), &lg));
  }
  LineGraphPtr line(lg);
  write_to(a.out, edge_list(line_graph_graph(line.get()).get()));
  if (!a.provenance.empty()) write_to(a.provenance, provenance(line.get()));
  return 0;
}

struct VerifyArgs {
  std::string check;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> floor;
  std::optional<std::int64_t> budget;
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  bool adversarial = false;
  bool all_witnesses = false;
  std::uint64_t enumeration_budget = 0;
  unsigned jobs = 1;
  std::string in;
  bool direct = false;
  std::string family;
  int n = 0;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  hlm_verify_options o;
  hlm_verify_options_init(&o);
  o.check = a.check.c_str();
  o.m = a.m.value_or(-1);
  o.floor = a.floor.value_or(-1);
  o.budget = a.budget.value_or(-1);
  o.sampled = a.mode == "sample";
  o.samples = a.samples;
  o.seed = a.seed;
  o.adversarial = a.adversarial;
  o.all_witnesses = a.all_witnesses;
  o.enumeration_budget = a.enumeration_budget;
  o.jobs = a.jobs;

  nlohmann::json target;
  char* report = nullptr;
  int outcome = kExitError;
  if (!a.in.empty()) {
    const std::string text = read_file(a.in);
    target = {{"file", a.in}, {"fnv1a64", fnv1a(text)}, {"direct", a.direct}};
    GraphPtr g = parse_graph(text);
    if (a.direct) {
      check(hlm_verify_graph(g.get(), &o, target.dump().c_str(), &report, &outcome));
    } else {
      hlm_network* h = nullptr;
      check(hlm_network_from_graph(g.get(), &h));
      NetworkPtr owner(h);
      check(hlm_verify_network(h, &o, target.dump().c_str(), &report, &outcome));
    }
  } else {
    if (a.family.empty() || a.n == 0) throw CliError("verify needs --in or --family with --n");
    target = {{"family", a.family}, {"n", a.n}};
    if (a.family == "random") target["seed"] = a.seed;
    NetworkPtr h = generate(a.family, a.n, a.seed);
    check(hlm_verify_network(h.get(), &o, target.dump().c_str(), &report, &outcome));
  }
  write_to(a.out, take(report));
  return outcome;
}

void emit_error_report(const std::string& check_name, const std::string& message, const std::string& out) {
  char* report = nullptr;
  if (hlm_error_report(check_name.c_str(), message.c_str(), &report) != HLM_OK) return;
  const std::string text = take(report);
  try {
    write_to(out, text);
  } catch (const CliError&) {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypercube-like networks, line graphs and fault-tolerant Menger checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hlm_version());

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit an n-dimensional HL network as an edge list");
  gen_cmd->add_option("--family", gen.family, "hypercube, crossed, mobius0, mobius1, ltq or random")->required();
  gen_cmd->add_option("--n", gen.n, "Dimension")->required()->check(CLI::Range(1, 24));
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random family");
  gen_cmd->add_option("--out", gen.out, "Edge-list output (default stdout)");
  gen_cmd->add_option("--construction", gen.construction, "Write per-level bijections as JSON");

  LineArgs line;
  auto* line_cmd = app.add_subcommand("linegraph", "Line graph of an edge list, with provenance");
  line_cmd->add_option("--in", line.in, "Base edge list");
  line_cmd->add_option("--out", line.out, "Line-graph edge list (default stdout)");
  line_cmd->add_option("--provenance", line.provenance, "Line vertex to base edge map as JSON");
  line_cmd->add_flag("--bcdc", line.bcdc, "Build the BCDC pair instead (B_n goes to --out)");
  line_cmd->add_option("--n", line.n, "Dimension for --bcdc")->check(CLI::Range(2, 16));
  line_cmd->add_option("--original", line.original, "A_n output for --bcdc");

  BcdcArgs bc;
  auto* bcdc_cmd = app.add_subcommand("bcdc", "Emit the BCDC original graph A_n and logical graph B_n");
  bcdc_cmd->add_option("--n", bc.n, "Dimension")->required()->check(CLI::Range(2, 16));
  bcdc_cmd->add_option("--original", bc.original, "A_n edge list");
  bcdc_cmd->add_option("--logical", bc.logical, "B_n edge list");
  bcdc_cmd->add_option("--provenance", bc.provenance, "B_n provenance JSON");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a check and print a JSON report");
  ver_cmd->add_option("--check", ver.check, "Check name")
      ->required()
      ->check(CLI::IsMember({"smec", "ft-smec", "cond-ft-smec", "lemma32", "lemma41", "appendixA", "tight-uncond",
                             "tight-cond", "hl-valid", "prop31", "bcdc"}));
  ver_cmd->add_option("--m", ver.m, "Fault size bound")->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--floor", ver.floor, "Component size floor (component lemmas)")->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--budget", ver.budget, "Fault budget |S| (component lemmas)")->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--mode", ver.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  ver_cmd->add_option("--samples", ver.samples, "Samples in sample mode");
  ver_cmd->add_option("--seed", ver.seed, "Seed for sampling and the random family");
  ver_cmd->add_flag("--adversarial", ver.adversarial, "Append the adversarial fault-set suite");
  ver_cmd->add_flag("--all-witnesses", ver.all_witnesses, "Tightness: examine every candidate v");
  ver_cmd->add_option("--enumeration-budget", ver.enumeration_budget, "Exhaustive fault-set cap (default 10^7)");
  ver_cmd->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  ver_cmd->add_option("--in", ver.in, "Edge list of a coded HL network");
  ver_cmd->add_flag("--direct", ver.direct, "Verify the --in graph itself (smec checks only)");
  ver_cmd->add_option("--family", ver.family, "Network family");
  ver_cmd->add_option("--n", ver.n, "Dimension")->check(CLI::Range(1, 20));
  ver_cmd->add_option("--out", ver.out, "Report output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (ver_cmd->parsed()) emit_error_report(ver.check, e.what(), "");
    return kExitError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (line_cmd->parsed()) return cmd_linegraph(line);
    if (bcdc_cmd->parsed()) return cmd_bcdc(bc);
    return cmd_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (ver_cmd->parsed()) emit_error_report(ver.check, e.what(), ver.out);
    return kExitError;
  }
}
