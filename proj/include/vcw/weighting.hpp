#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcw/cut.hpp"
#include "vcw/flow.hpp"
#include "vcw/graph.hpp"
#include "vcw/star_coloring.hpp"
#include "vcw/verify.hpp"
#include "vcw/weighting_types.hpp"

namespace vcw {

inline constexpr const char* kVersion = "1.0.0";

enum class CutStrategy {
  kLocalSearch,  // 1-flip local search (default)
  kExact,        // exhaustive maximum cut, bounded by exact_cut_threshold
  kRandomStart,  // unimproved random bipartition; exercises the repair loops
};

struct WeightOptions {
  CutStrategy cut_strategy = CutStrategy::kLocalSearch;
  int exact_cut_threshold = kDefaultExactCutThreshold;
  std::uint64_t seed = 0;
};

// Per-vertex targets, indexed by vertex id of the component graph.
// Processing index 0 is the special vertex, 1..m its neighbors in ascending
// id order, then the remaining vertices in ascending id order.
struct TargetAssignment {
  std::vector<Vertex> sequence;  // processing order, special vertex first
  std::vector<int> index;        // position of each vertex in sequence
  std::vector<int> k;            // number of +2 steps above t
  std::vector<int> precolor;     // g on the closed neighborhood, else 0
  std::vector<int> t;            // weighted degree when the target was fixed
  std::vector<int> f;            // designated color
};

// All edges get 2, except a BFS spanning tree of the cut graph rooted at r
// (edges set to 2 or 3, leaves first) and the edge {special, r} (1 or 2),
// so that each vertex other than `special` has an even weighted degree on
// side S and an odd one on side T. `sides` covers the component with
// `special` marked Side::kNone. Throws PreconditionViolated if the cut graph
// is disconnected or r is not a neighbor of `special`.
EdgeWeighting initial_parity_weighting(const Graph& g, Vertex special,
                                       std::span<const Side> sides, Vertex r);

// Greedy pre-colors on the neighbors of `special`: each neighbor in turn takes
// the smallest s_mu + 2k not used by an earlier adjacent neighbor.
TargetAssignment neighborhood_targets(const Graph& g, Vertex special,
                                      const EdgeWeighting& mu);

// Adds the star increments to mu on the closed neighborhood of `special` and
// fixes f there. With a single neighbor the weighting passes through
// unchanged. Returns the new weighting; `star_case` receives the branch used.
EdgeWeighting splice_star_coloring(const Graph& g, Vertex special,
                                   const EdgeWeighting& mu,
                                   TargetAssignment& targets,
                                   std::optional<StarCase>* star_case = nullptr);

// Records t for every vertex and greedily fixes f and k for the vertices
// outside the closed neighborhood of `special`.
void complete_targets(const Graph& g, Vertex special, const EdgeWeighting& omega,
                      TargetAssignment& targets);

// Each vertex with k > 0 picks its k earliest same-side neighbors. On side S
// the demand arc points from the vertex to the neighbor; on side T it points
// from the neighbor to the vertex.
OrientedDemand build_demand(const Graph& g, const TargetAssignment& targets,
                            std::span<const Side> sides);

// Alternating +1/-1 along each path (vertex sequence without the terminals):
// an edge leaving an S vertex gains 1, an edge leaving a T vertex loses 1.
EdgeWeighting apply_path_modifications(
    const Graph& g, EdgeWeighting omega, std::span<const Side> sides,
    const std::vector<std::vector<Vertex>>& paths);

// +1 on every demand edge.
EdgeWeighting finalize_demand_increment(const Graph& g, EdgeWeighting omega,
                                        const OrientedDemand& demand);

struct ComponentTrace {
  std::vector<Vertex> vertices;  // global ids, sorted
  ComponentClass kind = ComponentClass::kWeightable;
  Vertex special = -1;           // global id
  Vertex root = -1;              // global id
  std::vector<Vertex> s_side;    // global ids, final cut
  std::vector<Vertex> t_side;
  int reduced_edge_count = 0;    // |E(H)|
  CutSearchState cut_search;
  std::optional<StarCase> star_case;
  int attempts = 0;              // pipeline passes, including restarts
  std::vector<int> shortfalls;   // flow values that fell short, per restart
  int demand_size = 0;
  int flow_value = 0;
  int path_count = 0;
};

struct Certificate {
  Graph graph;
  EdgeWeighting weights;
  std::vector<int> weighted_degree;
  std::vector<int> color;
  std::vector<Side> sides;  // global; kNone for special and isolated vertices
  std::vector<ComponentTrace> components;
  Verdict verdict;
  std::uint64_t seed = 0;
  std::string version = kVersion;
};

// Full construction on a connected graph with at least three vertices.
// Ids in the returned trace are local to g.
struct ComponentResult {
  EdgeWeighting weights;
  std::vector<int> color;
  std::vector<Side> sides;
  ComponentTrace trace;
};
ComponentResult weight_connected(const Graph& g, const WeightOptions& options = {});

// Weights every component and attaches an independent verdict. Throws
// K2Component, TooLarge (exact cut above threshold), or InvariantViolation.
Certificate weight_graph(const Graph& g, const WeightOptions& options = {});

}  // namespace vcw
