#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

enum class Side : std::int8_t { kNone = -1, kS = 0, kT = 1 };

inline Side opposite(Side s) noexcept {
  return s == Side::kS ? Side::kT : (s == Side::kT ? Side::kS : Side::kNone);
}

// Bipartition (S, T) of a ground set. Vertices marked Side::kNone lie outside
// the ground set. The cut-edge list is derived on construction.
class Cut {
 public:
  Cut() = default;
  Cut(const Graph& g, std::vector<Side> sides);

  // Every vertex on side S except those listed in t_side.
  static Cut from_t_side(const Graph& g, std::span<const Vertex> t_side);

  Side side(Vertex v) const { return sides_[v]; }
  bool in_s(Vertex v) const { return sides_[v] == Side::kS; }
  bool in_t(Vertex v) const { return sides_[v] == Side::kT; }
  bool is_cut_edge(const Edge& e) const;

  std::span<const Side> sides() const noexcept { return sides_; }
  std::span<const EdgeId> cut_edges() const noexcept { return cut_edges_; }
  int size() const noexcept { return static_cast<int>(cut_edges_.size()); }

  std::vector<Vertex> s_vertices() const;
  std::vector<Vertex> t_vertices() const;

  // Copy with the side of every vertex in vs swapped.
  Cut flipped(const Graph& g, std::span<const Vertex> vs) const;

 private:
  std::vector<Side> sides_;
  std::vector<EdgeId> cut_edges_;
};

enum class CutStep { kLocalSearch, kExact, kRandomStart, kRepair, kMinCutImprove };

std::string to_string(CutStep step);

// Sizes of the cut after each recorded step. Improvement steps (repair and
// min-cut) strictly increase the size.
struct CutSearchState {
  struct Entry {
    CutStep step;
    int size;
  };
  std::vector<Entry> history;

  void record(CutStep step, int size) { history.push_back({step, size}); }
  int improvement_count() const;
};

// Components of the bipartite cut graph (vertex set = ground, edges = cut
// edges), each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> cut_graph_components(const Graph& h,
                                                      const Cut& cut);

// 1-flip local search. Seed 0 starts from S = even ids; any other seed starts
// from a random bipartition drawn from that seed. Vertices are swept in id
// order until no single flip strictly increases the cut.
Cut local_search_cut(const Graph& h, std::uint64_t seed = 0);

// Random bipartition without any improvement. Test and adversarial use only.
Cut random_cut(const Graph& h, std::uint64_t seed);

inline constexpr int kDefaultExactCutThreshold = 20;

// Globally maximum cut by enumeration over all bipartitions with vertex 0 in
// S; ties resolved by lexicographically smallest S. Throws TooLarge above the
// vertex threshold.
Cut exact_max_cut(const Graph& h, int threshold = kDefaultExactCutThreshold);

// Flips cut-graph components until the cut graph is connected. Every flip
// strictly increases the cut size. Requires h connected.
Cut repair_cut_connectivity(const Graph& h, Cut cut,
                            CutSearchState* trace = nullptr);

// Given the source side A of a minimum s-t cut in the demand network (on the
// vertices of h), returns ((S&A) | (T&B), (S&B) | (T&A)). Throws
// InvariantViolation("improve_cut_from_mincut", ...) if that cut is not
// strictly larger, which cannot happen when the flow fell short of |F|.
Cut improve_cut_from_mincut(const Graph& h, const Cut& cut,
                            const std::vector<bool>& source_side);

}  // namespace vcw
