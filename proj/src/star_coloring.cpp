#include "vcw/star_coloring.hpp"

#include <algorithm>

#include "vcw/errors.hpp"

namespace vcw {

std::string to_string(StarCase c) {
  switch (c) {
    case StarCase::kAllDistinct:
      return "all-distinct";
    case StarCase::kSingleMatch:
      return "single-match";
    case StarCase::kShiftBelow:
      return "shift-below";
    case StarCase::kShiftAbove:
      return "shift-above";
    case StarCase::kConsecutiveEven:
      return "consecutive-even";
    case StarCase::kConsecutiveOddNoEdge:
      return "consecutive-odd-no-edge";
    case StarCase::kConsecutiveOddTriangle:
      return "consecutive-odd-triangle";
  }
  return "unknown";
}

void check_star_instance(const StarInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  if (n < 3) throw PreconditionViolated("star instance needs >= 3 vertices");
  if (inst.center < 0 || inst.center >= n)
    throw PreconditionViolated("center out of range");
  if (static_cast<int>(inst.precolor.size()) != n)
    throw PreconditionViolated("precolor size does not match vertex count");
  if (g.degree(inst.center) != n - 1)
    throw PreconditionViolated("center is not adjacent to every vertex");
  for (int c : inst.precolor)
    if (c < 0) throw PreconditionViolated("negative precolor");
  for (const Edge& e : g.edges()) {
    if (e.u == inst.center || e.v == inst.center) continue;
    if (inst.precolor[e.u] == inst.precolor[e.v]) {
      throw PreconditionViolated("precolor conflict on edge {" +
                                 std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "}");
    }
  }
}

namespace {

struct Analysis {
  StarCase kind = StarCase::kAllDistinct;
  std::vector<Vertex> matched;  // same parity as center, sorted by (g, id)
  int shift = 0;                // smallest x >= 1 with c0 + 2x unused
  int below = 0;                // number of matched values < c0 + 2x
  int suffix_start = 0;         // j of the selected h_j
};

Analysis analyze(const StarInstance& inst) {
  const auto& g = inst.precolor;
  const Vertex center = inst.center;
  const int c0 = g[center];
  const int n = inst.graph.vertex_count();
  Analysis a;

  bool collision = false;
  for (Vertex v = 0; v < n; ++v) {
    if (v == center) continue;
    if (g[v] == c0) collision = true;
    if ((g[v] - c0) % 2 == 0) a.matched.push_back(v);
  }
  if (!collision) return a;

  std::stable_sort(a.matched.begin(), a.matched.end(), [&](Vertex x, Vertex y) {
    return std::pair(g[x], x) < std::pair(g[y], y);
  });
  const int m = static_cast<int>(a.matched.size());
  if (m == 1) {
    a.kind = StarCase::kSingleMatch;
    return a;
  }

  auto present = [&](int value) {
    return std::any_of(a.matched.begin(), a.matched.end(),
                       [&](Vertex v) { return g[v] == value; });
  };
  a.shift = 1;
  while (present(c0 + 2 * a.shift)) ++a.shift;
  const int target = c0 + 2 * a.shift;
  a.below = static_cast<int>(
      std::partition_point(a.matched.begin(), a.matched.end(),
                           [&](Vertex v) { return g[v] < target; }) -
      a.matched.begin());

  if (a.below <= m - a.shift) {
    a.kind = StarCase::kShiftBelow;
    a.suffix_start = m - a.shift;
  } else if (a.shift < m) {
    a.kind = StarCase::kShiftAbove;
    a.suffix_start = m - a.shift - 1;
  } else {
    for (int i = 0; i < m; ++i) {
      if (g[a.matched[i]] != c0 + 2 * i) {
        throw InvariantViolation("compute_h",
                                 "same-parity pre-colors are not a consecutive "
                                 "run starting at the center");
      }
    }
    if (m % 2 == 0) {
      a.kind = StarCase::kConsecutiveEven;
      a.suffix_start = m / 2;
    } else {
      const int z = (m + 3) / 2;  // 1-based
      const Vertex lower = a.matched[z - 2];
      const Vertex upper = a.matched[z - 1];
      a.kind = inst.graph.has_edge(lower, upper)
                   ? StarCase::kConsecutiveOddTriangle
                   : StarCase::kConsecutiveOddNoEdge;
    }
  }
  return a;
}

}  // namespace

StarCase select_case(const StarInstance& inst) {
  check_star_instance(inst);
  return analyze(inst).kind;
}

StarColoring compute_h(const StarInstance& inst) {
  check_star_instance(inst);
  const Graph& graph = inst.graph;
  const Vertex center = inst.center;
  const auto& g = inst.precolor;
  Analysis a = analyze(inst);

  StarColoring out;
  out.kind = a.kind;
  out.increment.assign(graph.edge_count(), 0);
  auto set = [&](Vertex u, Vertex v, int value) {
    out.increment[graph.edge_id(u, v)] = value;
  };
  // 1-based position i in the sorted matched list.
  auto matched = [&](int i) { return a.matched[i - 1]; };
  const int m = static_cast<int>(a.matched.size());

  switch (a.kind) {
    case StarCase::kAllDistinct:
      break;
    case StarCase::kSingleMatch: {
      Vertex best = -1;
      for (Vertex u : graph.neighbors(center)) {
        if (u == a.matched[0]) continue;
        if (best < 0 || g[u] > g[best]) best = u;
      }
      set(center, best, 2);
      break;
    }
    case StarCase::kShiftBelow:
    case StarCase::kShiftAbove:
    case StarCase::kConsecutiveEven:
      for (int i = a.suffix_start + 1; i <= m; ++i) set(center, matched(i), 2);
      break;
    case StarCase::kConsecutiveOddNoEdge:
    case StarCase::kConsecutiveOddTriangle: {
      const int z = (m + 3) / 2;
      for (int i = z + 1; i <= m; ++i) set(center, matched(i), 2);
      if (a.kind == StarCase::kConsecutiveOddNoEdge) {
        set(center, matched(z - 1), 2);
      } else {
        set(center, matched(z - 1), 1);
        set(center, matched(z), 1);
        set(matched(z - 1), matched(z), 1);
      }
      break;
    }
  }

  out.increment_sum.assign(graph.vertex_count(), 0);
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    out.increment_sum[graph.edge(id).u] += out.increment[id];
    out.increment_sum[graph.edge(id).v] += out.increment[id];
  }
  out.color.resize(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    out.color[v] = g[v] + out.increment_sum[v];
  return out;
}

}  // namespace vcw
