#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vcw/cut.hpp"
#include "vcw/graph.hpp"
#include "vcw/weighting_types.hpp"

namespace vcw {

struct Verdict {
  bool ok = true;
  std::vector<Edge> conflicts;  // edges whose endpoints share a weighted degree
  std::vector<int> weighted_degree;
};

// The acceptance authority: recomputes weighted degrees from scratch and lists
// every conflicting edge. Throws DomainMismatch if the weighting does not
// cover exactly the edges of g.
Verdict verify_weighting(const Graph& g, const EdgeWeighting& w);

// Builds an edge weighting from (u, v, weight) triples. Throws DomainMismatch
// for missing, repeated, or non-edge entries.
struct WeightEntry {
  Vertex u;
  Vertex v;
  int weight;
};
EdgeWeighting weighting_from_entries(const Graph& g,
                                     std::span<const WeightEntry> entries);

inline constexpr std::uint64_t kEnumerationBudget = 100'000'000;

struct MinKResult {
  std::optional<int> k;           // nullopt: nothing up to k_max works
  std::optional<EdgeWeighting> witness;
};

// Smallest k <= k_max admitting a vertex-coloring weighting E -> {1..k},
// by exhaustive lexicographic enumeration with incremental conflict pruning.
// Throws K2Component, or BudgetExceeded when k^|E| exceeds the budget for a
// k that has to be searched.
MinKResult brute_force_min_k(const Graph& g, int k_max,
                             std::uint64_t budget = kEnumerationBudget);

// Random weightings E -> {1..k} for k = 1..k_max. The result is an upper
// bound on the minimum (a witness was found), never an exact value.
MinKResult sample_min_k_upper_bound(const Graph& g, int k_max, int samples,
                                    std::uint64_t seed);

// True iff every vertex outside the special vertex has an even weighted
// degree on side S and an odd one on side T. Vertices outside the ground set
// of the side map are ignored.
bool parity_audit(const Graph& g, const EdgeWeighting& w,
                  std::span<const Side> sides, Vertex special);

}  // namespace vcw
