#include <algorithm>
#include <chrono>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "hlmenger/error.hpp"
#include "hlmenger/menger.hpp"
#include "hlmenger/random.hpp"

namespace hlmenger {

namespace {

constexpr std::size_t kBatch = 256;

struct Item {
  std::uint64_t ordinal = 0;
  std::vector<EdgeIndex> faults;
};

// δ(host − F) ≥ 2, touching only the endpoints of F.
class Admissibility {
 public:
  explicit Admissibility(const Graph& host) : host_(host), degree_(host.vertex_count()) {
    for (VertexId v = 0; v < host.vertex_count(); ++v) degree_[v] = host.degree(v);
    base_ok_ = host.vertex_count() == 0 || host.min_degree() >= 2;
  }

  bool operator()(std::span<const EdgeIndex> faults) {
    if (!base_ok_) return false;
    for (EdgeIndex e : faults) {
      --degree_[host_.edge(e).u];
      --degree_[host_.edge(e).v];
    }
    bool ok = true;
    for (EdgeIndex e : faults) ok = ok && degree_[host_.edge(e).u] >= 2 && degree_[host_.edge(e).v] >= 2;
    for (EdgeIndex e : faults) {
      ++degree_[host_.edge(e).u];
      ++degree_[host_.edge(e).v];
    }
    return ok;
  }

 private:
  const Graph& host_;
  std::vector<std::size_t> degree_;
  bool base_ok_ = true;
};

// Produces admissible fault sets in ordinal order. Not thread-safe; the
// campaign driver serializes access.
class FaultSource {
 public:
  FaultSource(const Graph& host, const FaultCampaign& c, std::span<const std::vector<EdgeIndex>> extra)
      : host_(host), c_(c), extra_(extra), admissible_(host) {
    edge_count_ = host.edge_count();
    size_ = c.sizes == SizePolicy::ExactlyM ? c.m : 0;
    pick_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) pick_[i] = static_cast<EdgeIndex>(i);
  }

  std::size_t fill(std::vector<Item>& batch) {
    batch.clear();
    Item item;
    while (batch.size() < kBatch && next(item)) batch.push_back(std::move(item));
    return batch.size();
  }

  std::uint64_t visited = 0;
  std::uint64_t skipped = 0;
  std::uint64_t adversarial = 0;

 private:
  bool next(Item& out) {
    while (true) {
      if (!main_done_) {
        if (c_.mode == CampaignMode::Exhaustive ? next_combination(out.faults) : next_sample(out.faults)) {
          out.ordinal = ordinal_++;
          return true;
        }
        main_done_ = true;
        continue;
      }
      if (extra_index_ >= extra_.size()) return false;
      out.faults = extra_[extra_index_++];
      std::sort(out.faults.begin(), out.faults.end());
      out.faults.erase(std::unique(out.faults.begin(), out.faults.end()), out.faults.end());
      ++visited;
      ++adversarial;
      ++ordinal_;
      if (c_.conditional && !admissible_(out.faults)) {
        ++skipped;
        continue;
      }
      out.ordinal = ordinal_ - 1;
      return true;
    }
  }

  // Size-then-lexicographic enumeration of index combinations.
  bool next_combination(std::vector<EdgeIndex>& out) {
    while (size_ <= c_.m && size_ <= edge_count_) {
      if (exhausted_size_) {
        ++size_;
        pick_.resize(size_);
        for (std::size_t i = 0; i < size_; ++i) pick_[i] = static_cast<EdgeIndex>(i);
        exhausted_size_ = false;
        if (c_.sizes == SizePolicy::ExactlyM || size_ > c_.m || size_ > edge_count_) return false;
        continue;
      }
      out = pick_;
      advance();
      ++visited;
      if (c_.conditional && !admissible_(out)) {
        ++skipped;
        continue;
      }
      return true;
    }
    return false;
  }

  void advance() {
    const std::size_t k = size_;
    std::size_t i = k;
    while (i > 0 && pick_[i - 1] == edge_count_ - k + i - 1) --i;
    if (i == 0) {
      exhausted_size_ = true;
      return;
    }
    ++pick_[i - 1];
    for (std::size_t j = i; j < k; ++j) pick_[j] = pick_[j - 1] + 1;
  }

  bool next_sample(std::vector<EdgeIndex>& out) {
    if (sample_ >= c_.samples) return false;
    Rng rng(mix_seed(c_.seed, sample_));
    ++sample_;
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt > c_.max_redraws) {
        throw Error(ErrorCode::BudgetExceeded, "no admissible conditional fault set after " +
                                                   std::to_string(c_.max_redraws) + " redraws");
      }
      std::size_t k = c_.m;
      if (c_.sizes == SizePolicy::UpToM && c_.m > 0 && uniform_below(rng, 5) == 4) k = uniform_below(rng, c_.m);
      out = random_subset(edge_count_, k, rng);
      ++visited;
      if (c_.conditional && !admissible_(out)) {
        ++skipped;
        continue;
      }
      return true;
    }
  }

  const Graph& host_;
  const FaultCampaign& c_;
  std::span<const std::vector<EdgeIndex>> extra_;
  Admissibility admissible_;
  std::size_t edge_count_ = 0;

  std::size_t size_ = 0;
  std::vector<EdgeIndex> pick_;
  bool exhausted_size_ = false;
  std::uint64_t sample_ = 0;
  bool main_done_ = false;
  std::size_t extra_index_ = 0;
  std::uint64_t ordinal_ = 0;
};

struct WorkerResult {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t first_ordinal = std::numeric_limits<std::uint64_t>::max();
  std::optional<Witness> first;
};

const char* mode_name(CampaignMode m) { return m == CampaignMode::Exhaustive ? "exhaustive" : "sampled"; }

}  // namespace

VerificationReport run_fault_campaign(const Graph& host, const FaultCampaign& c,
                                      std::span<const std::vector<EdgeIndex>> extra_sets, const FaultCheck& check) {
  const auto start = std::chrono::steady_clock::now();
  if (c.m > host.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "fault size " + std::to_string(c.m) + " exceeds the " +
                                                std::to_string(host.edge_count()) + " edges of the graph");
  }
  if (c.mode == CampaignMode::Exhaustive) {
    const std::uint64_t total =
        c.sizes == SizePolicy::UpToM ? subsets_up_to(host.edge_count(), c.m) : binomial(host.edge_count(), c.m);
    if (total > c.budget) {
      throw Error(ErrorCode::BudgetExceeded, "exhaustive campaign needs " + std::to_string(total) +
                                                 " fault sets, budget is " + std::to_string(c.budget));
    }
  }

  FaultSource source(host, c, extra_sets);
  std::mutex source_lock;
  auto work = [&](WorkerResult& out) {
    std::vector<Item> batch;
    while (true) {
      {
        std::lock_guard<std::mutex> guard(source_lock);
        if (source.fill(batch) == 0) return;
      }
      for (const Item& item : batch) {
        ++out.checked;
        auto w = check(host, item.faults);
        if (!w) continue;
        ++out.failures;
        if (item.ordinal < out.first_ordinal) {
          out.first_ordinal = item.ordinal;
          if (w->fault_edges.empty()) w->fault_edges = FaultSet::from_indices(host, item.faults).edges();
          out.first = std::move(w);
        }
      }
    }
  };

  const unsigned jobs = std::max(1u, c.jobs);
  std::vector<WorkerResult> results(jobs);
  if (jobs == 1) {
    work(results[0]);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          work(results[j]);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VerificationReport r;
  r.mode = mode_name(c.mode);
  r.parameters = {{"m", c.m},
                  {"conditional", c.conditional},
                  {"sizes", c.sizes == SizePolicy::UpToM ? "up_to_m" : "exactly_m"},
                  {"adversarial", c.adversarial},
                  {"budget", c.budget},
                  {"pair_order", "lexicographic"}};
  if (c.mode == CampaignMode::Sampled) {
    r.parameters["samples"] = c.samples;
    r.parameters["seed"] = c.seed;
    r.parameters["rng"] = kRngName;
    r.parameters["sampling"] = "per-sample stream mix(seed,i); |F|=m w.p. 4/5 else uniform in [0,m); redraw rejects";
  }
  r.counts.visited = source.visited;
  r.counts.skipped_conditional = source.skipped;
  r.counts.adversarial = source.adversarial;
  const WorkerResult* best = nullptr;
  for (const auto& w : results) {
    r.counts.checked += w.checked;
    r.counts.failures += w.failures;
    if (w.first && (!best || w.first_ordinal < best->first_ordinal)) best = &w;
  }
  if (best) r.witness = best->first;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

FaultCheck smec_check() {
  return [](const Graph& host, std::span<const EdgeIndex> faults) -> std::optional<Witness> {
    SmecVerdict verdict = is_smec(host.without_edge_indices(faults));
    if (verdict.holds) return std::nullopt;
    return std::move(verdict.witness);
  };
}

std::string smec_name(const FaultCampaign& c) { return c.conditional ? "cond-ft-smec" : "ft-smec"; }

}  // namespace

VerificationReport run_campaign(const LineGraph& lg, const FaultCampaign& c) {
  std::vector<std::vector<EdgeIndex>> extra;
  if (c.adversarial) extra = adversarial_index_sets(lg, c.m);
  VerificationReport r = run_fault_campaign(lg.graph, c, extra, smec_check());
  r.check_name = smec_name(c);
  return r;
}

VerificationReport run_campaign(const Graph& g, const FaultCampaign& c) {
  std::vector<std::vector<EdgeIndex>> extra;
  if (c.adversarial) {
    LineGraph plain;
    plain.graph = g;
    extra = adversarial_index_sets(plain, c.m);
  }
  VerificationReport r = run_fault_campaign(g, c, extra, smec_check());
  r.check_name = smec_name(c);
  return r;
}

VerificationReport check_component_lemma(const LineGraph& lg, std::size_t fault_budget, std::size_t floor,
                                         const FaultCampaign& c) {
  if (floor > lg.graph.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "floor " + std::to_string(floor) + " exceeds the vertex count");
  }
  FaultCampaign campaign = c;
  campaign.m = fault_budget;
  std::vector<std::vector<EdgeIndex>> extra;
  if (c.adversarial) extra = adversarial_index_sets(lg, fault_budget);
  FaultCheck check = [floor](const Graph& host, std::span<const EdgeIndex> faults) -> std::optional<Witness> {
    const std::size_t largest = largest_component_size_without(host, faults);
    if (largest >= floor) return std::nullopt;
    Witness w;
    w.largest_component = largest;
    w.note = "largest component below " + std::to_string(floor);
    return w;
  };
  VerificationReport r = run_fault_campaign(lg.graph, campaign, extra, check);
  r.check_name = "component-lemma";
  r.parameters["floor"] = floor;
  return r;
}

}  // namespace hlmenger
