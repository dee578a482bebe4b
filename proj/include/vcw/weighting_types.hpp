#pragma once

#include <span>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

// Integer weight per edge id of a fixed graph.
class EdgeWeighting {
 public:
  EdgeWeighting() = default;
  explicit EdgeWeighting(int edge_count, int initial = 0)
      : w_(edge_count, initial) {}
  explicit EdgeWeighting(std::vector<int> weights) : w_(std::move(weights)) {}

  int size() const noexcept { return static_cast<int>(w_.size()); }
  int& operator[](EdgeId e) { return w_[e]; }
  int operator[](EdgeId e) const { return w_[e]; }
  std::span<const int> values() const noexcept { return w_; }

  friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;

 private:
  std::vector<int> w_;
};

inline std::vector<int> weighted_degrees(const Graph& g, const EdgeWeighting& w) {
  std::vector<int> s(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    s[g.edge(e).u] += w[e];
    s[g.edge(e).v] += w[e];
  }
  return s;
}

inline int weighted_degree(const Graph& g, const EdgeWeighting& w, Vertex v) {
  int s = 0;
  for (EdgeId e : g.incident_edges(v)) s += w[e];
  return s;
}

}  // namespace vcw
