#include "vcw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "vcw/errors.hpp"
#include "vcw/generators.hpp"

namespace vcw {

std::uint64_t SweepSummary::checked() const {
  return std::accumulate(checked_per_n.begin(), checked_per_n.end(),
                         std::uint64_t{0});
}

namespace {

bool has_k2(const Graph& g) {
  for (const auto& c : classify_components(g))
    if (c.kind == ComponentClass::kK2) return true;
  return false;
}

constexpr std::size_t kMaxFailureSamples = 10;

void check_one(const Graph& g, const SweepOptions& options, SweepSummary& local) {
  try {
    const Certificate cert = weight_graph(g, options.weight);
    const Verdict verdict = options.verifier(g, cert.weights);
    bool failed = !verdict.ok;
    int max_weight = 0;
    for (int w : cert.weights.values()) {
      if (w < 1 || w > 4) {
        ++local.range_failures;
        failed = true;
      } else {
        ++local.weight_histogram[w];
      }
      max_weight = std::max(max_weight, w);
    }
    if (max_weight <= 4) ++local.max_weight_histogram[max_weight];
    if (!parity_audit(g, cert.weights, cert.sides, -1)) {
      ++local.parity_failures;
      failed = true;
    }
    bool shortfall = false;
    for (const auto& c : cert.components) {
      const int improvements = c.cut_search.improvement_count();
      local.max_improvements = std::max(local.max_improvements, improvements);
      if (improvements > c.reduced_edge_count)
        local.improvements_within_bound = false;
      if (!c.shortfalls.empty()) shortfall = true;
      if (c.kind == ComponentClass::kWeightable && c.flow_value != c.demand_size) {
        ++local.flow_mismatches;
        failed = true;
      }
    }
    if (shortfall) ++local.flow_shortfall_runs;
    if (failed) {
      ++local.failures;
      if (local.failure_samples.size() < kMaxFailureSamples) {
        local.failure_samples.push_back("n=" + std::to_string(g.vertex_count()) +
                                        " m=" + std::to_string(g.edge_count()) +
                                        ": certificate rejected");
      }
    }
  } catch (const Error& e) {
    ++local.failures;
    if (local.failure_samples.size() < kMaxFailureSamples)
      local.failure_samples.push_back(e.what());
  }
}

void merge(SweepSummary& into, const SweepSummary& from) {
  for (std::size_t i = 0; i < into.checked_per_n.size(); ++i) {
    into.graphs_per_n[i] += from.graphs_per_n[i];
    into.skipped_per_n[i] += from.skipped_per_n[i];
    into.checked_per_n[i] += from.checked_per_n[i];
  }
  into.failures += from.failures;
  into.parity_failures += from.parity_failures;
  into.range_failures += from.range_failures;
  into.flow_shortfall_runs += from.flow_shortfall_runs;
  into.flow_mismatches += from.flow_mismatches;
  into.max_improvements = std::max(into.max_improvements, from.max_improvements);
  into.improvements_within_bound =
      into.improvements_within_bound && from.improvements_within_bound;
  for (std::size_t w = 0; w < into.weight_histogram.size(); ++w) {
    into.weight_histogram[w] += from.weight_histogram[w];
    into.max_weight_histogram[w] += from.max_weight_histogram[w];
  }
  for (const auto& s : from.failure_samples)
    if (into.failure_samples.size() < kMaxFailureSamples)
      into.failure_samples.push_back(s);
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& options) {
  if (options.n_max < 1 || options.n_max > 7)
    throw PreconditionViolated("sweep supports 1 <= n_max <= 7");
  const auto start = std::chrono::steady_clock::now();
  const int slots = options.n_max + 1;
  auto blank = [slots] {
    SweepSummary s;
    s.graphs_per_n.assign(slots, 0);
    s.skipped_per_n.assign(slots, 0);
    s.checked_per_n.assign(slots, 0);
    return s;
  };
  SweepSummary total = blank();

  // One job per (n, mask) pair, handed out in blocks.
  std::vector<std::pair<int, std::uint64_t>> ranges;  // (n, mask count)
  for (int n = 1; n <= options.n_max; ++n)
    ranges.emplace_back(n, std::uint64_t{1} << (n * (n - 1) / 2));

  int jobs = options.jobs > 0
                 ? options.jobs
                 : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::mutex lock;
  for (auto [n, count] : ranges) {
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t kBlock = 256;
    auto worker = [&, n = n, count = count] {
      SweepSummary local = blank();
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kBlock);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + kBlock);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const Graph g = gen::from_mask(n, mask);
          ++local.graphs_per_n[n];
          if (has_k2(g)) {
            ++local.skipped_per_n[n];
            continue;
          }
          ++local.checked_per_n[n];
          check_one(g, options, local);
        }
      }
      std::lock_guard<std::mutex> guard(lock);
      merge(total, local);
    };
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(jobs, (count + kBlock - 1) / kBlock));
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  total.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return total;
}

void write_sweep_summary(std::ostream& out, const SweepSummary& s) {
  out << "n graphs skipped_k2 checked\n";
  for (std::size_t n = 1; n < s.graphs_per_n.size(); ++n) {
    out << n << ' ' << s.graphs_per_n[n] << ' ' << s.skipped_per_n[n] << ' '
        << s.checked_per_n[n] << '\n';
  }
  out << "checked " << s.checked() << '\n';
  out << "failures " << s.failures << '\n';
  out << "parity_failures " << s.parity_failures << '\n';
  out << "range_failures " << s.range_failures << '\n';
  out << "flow_shortfall_runs " << s.flow_shortfall_runs << '\n';
  out << "flow_mismatches " << s.flow_mismatches << '\n';
  out << "max_cut_improvements " << s.max_improvements << '\n';
  out << "improvements_within_bound "
      << (s.improvements_within_bound ? "yes" : "no") << '\n';
  out << "edges_by_weight";
  for (int w = 1; w <= 4; ++w) out << ' ' << w << ':' << s.weight_histogram[w];
  out << '\n';
  out << "graphs_by_max_weight";
  for (int w = 0; w <= 4; ++w) out << ' ' << w << ':' << s.max_weight_histogram[w];
  out << '\n';
  for (const auto& msg : s.failure_samples) out << "failure " << msg << '\n';
  out << "seconds " << s.seconds << '\n';
}

}  // namespace vcw
