#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "vcw/cut.hpp"
#include "vcw/graph.hpp"

namespace vcw {

// Same-side edges that need a unit transfer of weighted degree, each with a
// direction. Entries are listed as (tail, head); the undirected F-edge is
// {tail, head}.
struct OrientedDemand {
  struct Arc {
    Vertex tail;
    Vertex head;
  };
  std::vector<Arc> arcs;

  int size() const noexcept { return static_cast<int>(arcs.size()); }
  bool empty() const noexcept { return arcs.empty(); }
};

// Directed multigraph with unit capacities. Nodes 0..n-1 are the vertices of
// the underlying graph, followed by source and sink.
struct FlowNetwork {
  struct Arc {
    int tail;
    int head;
    int capacity = 1;
  };
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;

  static FlowNetwork with_terminals(int vertex_count);
  int add_arc(int tail, int head, int capacity = 1);
};

struct FlowResult {
  int value = 0;
  std::vector<int> arc_flow;
  // Node sequences, each starting at the source and ending at the sink.
  std::vector<std::vector<int>> paths;
  // Source side of the residual reachability cut (indexed by node).
  std::vector<bool> source_side;
};

// Demand network: both arcs of every cut edge, then (s, tail) and (head, t)
// for every demand arc. Cut arcs come first, ordered by edge id; demand arcs
// follow in demand order. Throws PreconditionViolated if a demand edge is not
// a same-side edge of h.
FlowNetwork build_network(const Graph& h, const Cut& cut,
                          const OrientedDemand& demand);

// Shortest augmenting paths over the residual network. Integral; also fills
// source_side with the nodes reachable from the source in the final residual
// network.
FlowResult max_flow(const FlowNetwork& net);

// Removes flow circulating on antiparallel arc pairs (u, v), (v, u).
FlowResult cancel_opposite_arcs(FlowResult flow, const FlowNetwork& net);

// Splits the flow into `value` arc-disjoint source-sink paths. Walks always
// take the smallest-head unused flow arc and closed loops are erased, so each
// path visits every node at most once. Throws InvariantViolation
// ("decompose_paths", ...) when the flow is not feasible.
std::vector<std::vector<int>> decompose_paths(const FlowResult& flow,
                                              const FlowNetwork& net);

// Capacity of the arcs leaving the given source side.
int cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side);

// Checks capacity and conservation constraints; returns the flow value
// (net out-flow of the source) or nullopt if infeasible.
std::optional<int> flow_value_if_feasible(const FlowNetwork& net,
                                          const std::vector<int>& arc_flow);

void dump_network(std::ostream& out, const FlowNetwork& net);

}  // namespace vcw
