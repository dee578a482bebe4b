#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vcw {

using Vertex = int;
using EdgeId = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edge ids follow the lexicographic order of (u, v); neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  // Throws InvalidGraph on self-loops, duplicate edges or out-of-range ids.
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
  // -1 when {u, v} is not an edge.
  EdgeId edge_id(Vertex u, Vertex v) const;

 private:
  static std::uint64_t key(Vertex u, Vertex v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> adj_edge_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

enum class ComponentClass { kIsolatedVertex, kK2, kWeightable };

struct Component {
  std::vector<Vertex> vertices;  // sorted
  ComponentClass kind = ComponentClass::kWeightable;
};

// Maximal connected vertex sets, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Classifies every component. Throws K2Component for the first single-edge
// component found.
std::vector<Component> validate(const Graph& g);

// Same classification without throwing.
std::vector<Component> classify_components(const Graph& g);

bool is_connected(const Graph& g);

// Smallest-id leaf of the DFS tree grown from vertex 0 (sorted neighbor
// order). Requires g connected with n >= 2.
Vertex find_non_articulation_vertex(const Graph& g);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
  std::vector<Vertex> to_local;   // parent id -> local id, -1 if absent
};

// Subgraph induced by vs. Local ids follow the ascending order of vs.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

}  // namespace vcw
