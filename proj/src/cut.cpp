#include "vcw/cut.hpp"

#include <algorithm>
#include <bit>

#include "vcw/errors.hpp"
#include "vcw/rng.hpp"

namespace vcw {

Cut::Cut(const Graph& g, std::vector<Side> sides) : sides_(std::move(sides)) {
  if (static_cast<int>(sides_.size()) != g.vertex_count())
    throw PreconditionViolated("cut side vector does not match vertex count");
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (is_cut_edge(g.edge(id))) cut_edges_.push_back(id);
}

Cut Cut::from_t_side(const Graph& g, std::span<const Vertex> t_side) {
  std::vector<Side> sides(g.vertex_count(), Side::kS);
  for (Vertex v : t_side) sides[v] = Side::kT;
  return Cut(g, std::move(sides));
}

bool Cut::is_cut_edge(const Edge& e) const {
  Side a = sides_[e.u];
  Side b = sides_[e.v];
  return a != Side::kNone && b != Side::kNone && a != b;
}

std::vector<Vertex> Cut::s_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(sides_.size()); ++v)
    if (sides_[v] == Side::kS) out.push_back(v);
  return out;
}

std::vector<Vertex> Cut::t_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(sides_.size()); ++v)
    if (sides_[v] == Side::kT) out.push_back(v);
  return out;
}

Cut Cut::flipped(const Graph& g, std::span<const Vertex> vs) const {
  std::vector<Side> sides = sides_;
  for (Vertex v : vs) sides[v] = opposite(sides[v]);
  return Cut(g, std::move(sides));
}

std::string to_string(CutStep step) {
  switch (step) {
    case CutStep::kLocalSearch:
      return "local-search";
    case CutStep::kExact:
      return "exact";
    case CutStep::kRandomStart:
      return "random-start";
    case CutStep::kRepair:
      return "repair";
    case CutStep::kMinCutImprove:
      return "mincut-improve";
  }
  return "unknown";
}

int CutSearchState::improvement_count() const {
  return static_cast<int>(std::count_if(
      history.begin(), history.end(), [](const Entry& e) {
        return e.step == CutStep::kRepair || e.step == CutStep::kMinCutImprove;
      }));
}

std::vector<std::vector<Vertex>> cut_graph_components(const Graph& h,
                                                      const Cut& cut) {
  const int n = h.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (comp[start] >= 0 || cut.side(start) == Side::kNone) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : h.neighbors(v)) {
        if (comp[w] < 0 && cut.side(w) == opposite(cut.side(v))) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

namespace {

void one_flip_sweeps(const Graph& h, std::vector<Side>& sides) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      int same = 0;
      int cross = 0;
      for (Vertex w : h.neighbors(v)) (sides[w] == sides[v] ? same : cross)++;
      if (same > cross) {
        sides[v] = opposite(sides[v]);
        improved = true;
      }
    }
  }
}

}  // namespace

Cut random_cut(const Graph& h, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Side> sides(h.vertex_count());
  for (auto& s : sides) s = rng.coin() ? Side::kT : Side::kS;
  return Cut(h, std::move(sides));
}

Cut local_search_cut(const Graph& h, std::uint64_t seed) {
  std::vector<Side> sides(h.vertex_count());
  if (seed == 0) {
    for (Vertex v = 0; v < h.vertex_count(); ++v)
      sides[v] = v % 2 == 0 ? Side::kS : Side::kT;
  } else {
    Rng rng(seed);
    for (auto& s : sides) s = rng.coin() ? Side::kT : Side::kS;
  }
  one_flip_sweeps(h, sides);
  return Cut(h, std::move(sides));
}

Cut exact_max_cut(const Graph& h, int threshold) {
  const int n = h.vertex_count();
  if (n > threshold || n > 30) {
    throw TooLarge("exact max cut limited to " + std::to_string(threshold) +
                   " vertices, graph has " + std::to_string(n));
  }
  if (n <= 1) return Cut(h, std::vector<Side>(n, Side::kS));

  // Bit i of a mask set => vertex i in T. Vertex 0 always stays in S, so only
  // vertices 1..n-1 are enumerated, in Gray-code order.
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : h.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  auto s_less = [n](std::uint32_t t_a, std::uint32_t t_b) {
    // Compare S = complement of T as sorted lists.
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    std::uint32_t a = all & ~t_a;
    std::uint32_t b = all & ~t_b;
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    int x = std::countr_zero(diff);
    std::uint32_t above = ~((2u << x) - 1);
    if ((a >> x) & 1u) return (b & above) != 0;  // b continues with a larger id
    return (a & above) == 0;                     // a is a prefix of b
  };

  std::uint32_t mask = 0;
  int size = 0;
  std::uint32_t best_mask = 0;
  int best = 0;
  const std::uint64_t total = 1ull << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i) + 1;
    const std::uint32_t bit = 1u << v;
    const bool in_t = (mask & bit) != 0;
    const std::uint32_t same_side = in_t ? mask : ~mask;
    const int same = std::popcount(adj[v] & same_side & ~bit);
    const int cross = std::popcount(adj[v]) - same;
    size += same - cross;
    mask ^= bit;
    if (size > best || (size == best && s_less(mask, best_mask))) {
      best = size;
      best_mask = mask;
    }
  }
  std::vector<Side> sides(n);
  for (Vertex v = 0; v < n; ++v)
    sides[v] = (best_mask >> v) & 1u ? Side::kT : Side::kS;
  return Cut(h, std::move(sides));
}

Cut repair_cut_connectivity(const Graph& h, Cut cut, CutSearchState* trace) {
  for (;;) {
    auto comps = cut_graph_components(h, cut);
    if (comps.size() <= 1) return cut;
    std::vector<int> comp_of(h.vertex_count(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      for (Vertex v : comps[c]) comp_of[v] = c;
    const std::vector<Vertex>* chosen = nullptr;
    for (const auto& comp : comps) {
      for (Vertex v : comp) {
        for (Vertex w : h.neighbors(v)) {
          if (comp_of[w] >= 0 && comp_of[w] != comp_of[v]) {
            chosen = &comp;
            break;
          }
        }
        if (chosen) break;
      }
      if (chosen) break;
    }
    if (!chosen) {
      throw PreconditionViolated(
          "repair_cut_connectivity requires a connected graph");
    }
    const int before = cut.size();
    cut = cut.flipped(h, *chosen);
    if (cut.size() <= before) {
      throw InvariantViolation("repair_cut_connectivity",
                               "component flip did not grow the cut");
    }
    if (trace) trace->record(CutStep::kRepair, cut.size());
  }
}

Cut improve_cut_from_mincut(const Graph& h, const Cut& cut,
                            const std::vector<bool>& source_side) {
  std::vector<Side> sides(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (cut.side(v) == Side::kNone) {
      sides[v] = Side::kNone;
      continue;
    }
    const bool in_a = source_side[v];
    sides[v] = (cut.in_s(v) == in_a) ? Side::kS : Side::kT;
  }
  Cut improved(h, std::move(sides));
  if (improved.size() <= cut.size()) {
    throw InvariantViolation("improve_cut_from_mincut",
                             "min-cut regrouping did not grow the cut (" +
                                 std::to_string(cut.size()) + " -> " +
                                 std::to_string(improved.size()) + ")");
  }
  return improved;
}

}  // namespace vcw
