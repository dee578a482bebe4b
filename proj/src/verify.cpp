#include "vcw/verify.hpp"

#include <algorithm>
#include <string>

#include "vcw/errors.hpp"
#include "vcw/rng.hpp"

namespace vcw {

Verdict verify_weighting(const Graph& g, const EdgeWeighting& w) {
  if (w.size() != g.edge_count()) {
    throw DomainMismatch("weighting covers " + std::to_string(w.size()) +
                         " edges, graph has " + std::to_string(g.edge_count()));
  }
  Verdict verdict;
  verdict.weighted_degree.assign(g.vertex_count(), 0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    verdict.weighted_degree[edges[i].u] += w[static_cast<EdgeId>(i)];
    verdict.weighted_degree[edges[i].v] += w[static_cast<EdgeId>(i)];
  }
  for (const Edge& e : edges) {
    if (verdict.weighted_degree[e.u] == verdict.weighted_degree[e.v])
      verdict.conflicts.push_back(e);
  }
  verdict.ok = verdict.conflicts.empty();
  return verdict;
}

EdgeWeighting weighting_from_entries(const Graph& g,
                                     std::span<const WeightEntry> entries) {
  std::vector<int> weights(g.edge_count(), 0);
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto& entry : entries) {
    const EdgeId id = g.edge_id(entry.u, entry.v);
    const std::string name =
        "{" + std::to_string(entry.u) + "," + std::to_string(entry.v) + "}";
    if (id < 0) throw DomainMismatch("weight given for non-edge " + name);
    if (seen[id]) throw DomainMismatch("edge " + name + " weighted twice");
    seen[id] = true;
    weights[id] = entry.weight;
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!seen[id]) {
      throw DomainMismatch("missing weight for edge {" +
                           std::to_string(g.edge(id).u) + "," +
                           std::to_string(g.edge(id).v) + "}");
    }
  }
  return EdgeWeighting(std::move(weights));
}

namespace {

// Depth-first enumeration over edges in id order. A vertex's weighted degree is
// final once its highest-id incident edge is assigned; at that point every
// edge whose endpoints are both final is checked.
class Enumerator {
 public:
  Enumerator(const Graph& g, int k) : g_(g), k_(k) {
    const int m = g.edge_count();
    std::vector<int> last(g.vertex_count(), -1);
    for (EdgeId e = 0; e < m; ++e) {
      last[g.edge(e).u] = e;
      last[g.edge(e).v] = e;
    }
    checks_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& edge = g.edge(e);
      checks_[std::max(last[edge.u], last[edge.v])].push_back(edge);
    }
    weights_.assign(m, 0);
    degree_.assign(g.vertex_count(), 0);
  }

  bool run() { return g_.edge_count() == 0 || descend(0); }
  EdgeWeighting witness() const { return EdgeWeighting(weights_); }

 private:
  bool descend(EdgeId e) {
    const Edge& edge = g_.edge(e);
    for (int w = 1; w <= k_; ++w) {
      weights_[e] = w;
      degree_[edge.u] += w;
      degree_[edge.v] += w;
      bool fine = true;
      for (const Edge& c : checks_[e]) {
        if (degree_[c.u] == degree_[c.v]) {
          fine = false;
          break;
        }
      }
      if (fine && (e + 1 == g_.edge_count() || descend(e + 1))) return true;
      degree_[edge.u] -= w;
      degree_[edge.v] -= w;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<std::vector<Edge>> checks_;
  std::vector<int> weights_;
  std::vector<int> degree_;
};

bool exceeds(std::uint64_t base, int exponent, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    if (total > budget / base) return true;
    total *= base;
  }
  return total > budget;
}

}  // namespace

MinKResult brute_force_min_k(const Graph& g, int k_max, std::uint64_t budget) {
  validate(g);
  MinKResult result;
  for (int k = 1; k <= k_max; ++k) {
    if (exceeds(static_cast<std::uint64_t>(k), g.edge_count(), budget)) {
      throw BudgetExceeded(std::to_string(k) + "^" +
                           std::to_string(g.edge_count()) +
                           " weightings exceed the enumeration budget of " +
                           std::to_string(budget));
    }
    Enumerator search(g, k);
    if (search.run()) {
      result.k = k;
      result.witness = search.witness();
      return result;
    }
  }
  return result;
}

MinKResult sample_min_k_upper_bound(const Graph& g, int k_max, int samples,
                                    std::uint64_t seed) {
  validate(g);
  Rng rng(seed);
  MinKResult result;
  for (int k = 1; k <= k_max; ++k) {
    for (int i = 0; i < samples; ++i) {
      EdgeWeighting w(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        w[e] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
      if (verify_weighting(g, w).ok) {
        result.k = k;
        result.witness = std::move(w);
        return result;
      }
    }
  }
  return result;
}

bool parity_audit(const Graph& g, const EdgeWeighting& w,
                  std::span<const Side> sides, Vertex special) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    degree[g.edge(e).u] += w[e];
    degree[g.edge(e).v] += w[e];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == special || sides[v] == Side::kNone) continue;
    const bool even = degree[v] % 2 == 0;
    if (even != (sides[v] == Side::kS)) return false;
  }
  return true;
}

}  // namespace vcw
