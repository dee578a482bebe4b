#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcw/verify.hpp"
#include "vcw/weighting.hpp"

namespace vcw {

using Verifier = std::function<Verdict(const Graph&, const EdgeWeighting&)>;

struct SweepOptions {
  int n_max = 5;
  int jobs = 0;  // 0: hardware concurrency
  WeightOptions weight;
  Verifier verifier = verify_weighting;  // replaceable for harness checks
};

struct SweepSummary {
  std::vector<std::uint64_t> graphs_per_n;  // labeled graphs enumerated
  std::vector<std::uint64_t> skipped_per_n; // with a K2 component
  std::vector<std::uint64_t> checked_per_n;
  std::uint64_t failures = 0;         // verifier rejections or engine errors
  std::uint64_t parity_failures = 0;
  std::uint64_t range_failures = 0;   // weight outside {1,2,3,4}
  std::uint64_t flow_shortfall_runs = 0;  // runs that needed a min-cut repair
  std::uint64_t flow_mismatches = 0;  // accepted flow value != demand size
  int max_improvements = 0;           // cut-improvement steps in one component
  bool improvements_within_bound = true;  // improvements <= |E(H)| everywhere
  std::array<std::uint64_t, 5> weight_histogram{};      // edges per weight 1..4
  std::array<std::uint64_t, 5> max_weight_histogram{};  // graphs per max weight
  std::vector<std::string> failure_samples;  // first few failure messages
  double seconds = 0.0;

  std::uint64_t checked() const;
};

// Enumerates every labeled graph on 1..n_max vertices, skips those with a K2
// component, weights the rest and checks each certificate.
SweepSummary run_sweep(const SweepOptions& options);

void write_sweep_summary(std::ostream& out, const SweepSummary& summary);

}  // namespace vcw
