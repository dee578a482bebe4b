#include "vcw/weighting.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "vcw/errors.hpp"

namespace vcw {
namespace {

int smallest_free(int base, const std::set<int>& blocked, int& steps) {
  steps = 0;
  while (blocked.count(base + 2 * steps)) ++steps;
  return base + 2 * steps;
}

void expect(bool condition, const char* stage, const std::string& what) {
  if (!condition) throw InvariantViolation(stage, what);
}

std::string edge_name(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

EdgeWeighting initial_parity_weighting(const Graph& g, Vertex special,
                                       std::span<const Side> sides, Vertex r) {
  const int n = g.vertex_count();
  const EdgeId root_edge = g.edge_id(special, r);
  if (root_edge < 0)
    throw PreconditionViolated("root is not adjacent to the special vertex");
  EdgeWeighting mu(g.edge_count(), 2);

  // BFS tree of the cut graph, sorted neighbor exploration.
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> order;
  std::queue<Vertex> q;
  seen[r] = true;
  q.push(r);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    order.push_back(v);
    auto nbrs = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex w = nbrs[i];
      if (seen[w] || sides[w] == Side::kNone || sides[w] == sides[v]) continue;
      seen[w] = true;
      parent_edge[w] = ids[i];
      q.push(w);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != special && !seen[v])
      throw PreconditionViolated("cut graph is disconnected");
  }

  // Children precede parents in reverse BFS order.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const int want = sides[v] == Side::kT ? 1 : 0;
    const EdgeId fix = v == r ? root_edge : parent_edge[v];
    if (weighted_degree(g, mu, v) % 2 != want) mu[fix] = v == r ? 1 : 3;
  }
  return mu;
}

TargetAssignment neighborhood_targets(const Graph& g, Vertex special,
                                      const EdgeWeighting& mu) {
  const int n = g.vertex_count();
  TargetAssignment targets;
  targets.index.assign(n, -1);
  targets.k.assign(n, 0);
  targets.precolor.assign(n, 0);
  targets.t.assign(n, 0);
  targets.f.assign(n, 0);

  targets.sequence.push_back(special);
  for (Vertex v : g.neighbors(special)) targets.sequence.push_back(v);
  for (Vertex v = 0; v < n; ++v) {
    if (v != special && !g.has_edge(v, special)) targets.sequence.push_back(v);
  }
  for (int i = 0; i < n; ++i) targets.index[targets.sequence[i]] = i;

  targets.precolor[special] = weighted_degree(g, mu, special);
  for (Vertex v : g.neighbors(special)) {
    std::set<int> blocked;
    for (Vertex w : g.neighbors(v)) {
      if (w != special && g.has_edge(w, special) &&
          targets.index[w] < targets.index[v])
        blocked.insert(targets.precolor[w]);
    }
    targets.precolor[v] =
        smallest_free(weighted_degree(g, mu, v), blocked, targets.k[v]);
  }
  return targets;
}

EdgeWeighting splice_star_coloring(const Graph& g, Vertex special,
                                   const EdgeWeighting& mu,
                                   TargetAssignment& targets,
                                   std::optional<StarCase>* star_case) {
  EdgeWeighting omega = mu;
  if (star_case) star_case->reset();
  if (g.degree(special) == 1) {
    const Vertex r = g.neighbors(special)[0];
    targets.f[special] = weighted_degree(g, omega, special);
    targets.f[r] = weighted_degree(g, omega, r);
    return omega;
  }

  std::vector<Vertex> closed(g.neighbors(special).begin(),
                             g.neighbors(special).end());
  closed.push_back(special);
  Subgraph star = induced_subgraph(g, closed);
  StarInstance inst;
  inst.graph = star.graph;
  inst.center = star.to_local[special];
  inst.precolor.resize(star.graph.vertex_count());
  for (Vertex local = 0; local < star.graph.vertex_count(); ++local)
    inst.precolor[local] = targets.precolor[star.to_parent[local]];

  StarColoring h = compute_h(inst);
  if (star_case) *star_case = h.kind;
  for (EdgeId local = 0; local < star.graph.edge_count(); ++local) {
    const Edge& e = star.graph.edge(local);
    const EdgeId id = g.edge_id(star.to_parent[e.u], star.to_parent[e.v]);
    omega[id] += h.increment[local];
  }
  for (Vertex local = 0; local < star.graph.vertex_count(); ++local)
    targets.f[star.to_parent[local]] = h.color[local];
  return omega;
}

void complete_targets(const Graph& g, Vertex special, const EdgeWeighting& omega,
                      TargetAssignment& targets) {
  const int m = g.degree(special);
  for (int i = 1; i < static_cast<int>(targets.sequence.size()); ++i) {
    const Vertex v = targets.sequence[i];
    targets.t[v] = weighted_degree(g, omega, v);
    if (i <= m) continue;
    std::set<int> blocked;
    for (Vertex w : g.neighbors(v)) {
      if (targets.index[w] < i) blocked.insert(targets.f[w]);
    }
    targets.f[v] = smallest_free(targets.t[v], blocked, targets.k[v]);
  }
  targets.t[special] = weighted_degree(g, omega, special);
}

OrientedDemand build_demand(const Graph& g, const TargetAssignment& targets,
                            std::span<const Side> sides) {
  OrientedDemand demand;
  for (std::size_t i = 1; i < targets.sequence.size(); ++i) {
    const Vertex v = targets.sequence[i];
    const int need = targets.k[v];
    if (need == 0) continue;
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(v)) {
      if (sides[w] != Side::kNone && sides[w] == sides[v] &&
          targets.index[w] < targets.index[v])
        earlier.push_back(w);
    }
    std::sort(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) {
      return targets.index[a] < targets.index[b];
    });
    if (static_cast<int>(earlier.size()) < need) {
      throw InvariantViolation("build_demand",
                               "vertex " + std::to_string(v) + " needs " +
                                   std::to_string(need) +
                                   " earlier same-side neighbors, has " +
                                   std::to_string(earlier.size()));
    }
    for (int j = 0; j < need; ++j) {
      if (sides[v] == Side::kS) {
        demand.arcs.push_back({v, earlier[j]});
      } else {
        demand.arcs.push_back({earlier[j], v});
      }
    }
  }
  return demand;
}

EdgeWeighting apply_path_modifications(
    const Graph& g, EdgeWeighting omega, std::span<const Side> sides,
    const std::vector<std::vector<Vertex>>& paths) {
  for (const auto& path : paths) {
    if (path.empty()) {
      throw InvariantViolation("apply_path_modifications", "empty path");
    }
    if (path.front() == path.back()) continue;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const Vertex a = path[i];
      const Vertex b = path[i + 1];
      const EdgeId id = g.edge_id(a, b);
      if (id < 0 || sides[a] == Side::kNone || sides[b] == Side::kNone ||
          sides[a] == sides[b]) {
        throw InvariantViolation("apply_path_modifications",
                                 "path step " + std::to_string(a) + "->" +
                                     std::to_string(b) + " is not a cut edge");
      }
      omega[id] += sides[a] == Side::kS ? 1 : -1;
      if (omega[id] < 1 || omega[id] > 4) {
        throw InvariantViolation("apply_path_modifications",
                                 "weight of " + edge_name(g.edge(id)) +
                                     " left {1,2,3,4}");
      }
    }
  }
  return omega;
}

EdgeWeighting finalize_demand_increment(const Graph& g, EdgeWeighting omega,
                                        const OrientedDemand& demand) {
  for (const auto& a : demand.arcs) {
    const EdgeId id = g.edge_id(a.tail, a.head);
    if (id < 0) {
      throw InvariantViolation("finalize_demand_increment",
                               "demand arc is not an edge");
    }
    ++omega[id];
  }
  return omega;
}

namespace {

void check_weights(const Graph& g, const EdgeWeighting& w, Vertex special,
                   int lo_special, int hi_special, int lo, int hi,
                   const char* stage) {
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const bool touches = e.u == special || e.v == special;
    const int a = touches ? lo_special : lo;
    const int b = touches ? hi_special : hi;
    expect(w[id] >= a && w[id] <= b, stage,
           "weight " + std::to_string(w[id]) + " on " + edge_name(e) +
               " outside [" + std::to_string(a) + "," + std::to_string(b) + "]");
  }
}

void check_parity(const Graph& g, const EdgeWeighting& w,
                  std::span<const Side> sides, Vertex special, const char* stage) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == special) continue;
    const int want = sides[v] == Side::kT ? 1 : 0;
    expect(weighted_degree(g, w, v) % 2 == want, stage,
           "parity of vertex " + std::to_string(v));
  }
}

void check_targets(const Graph& g, const TargetAssignment& targets,
                   std::span<const Side> sides, Vertex special) {
  for (const Edge& e : g.edges()) {
    expect(targets.f[e.u] != targets.f[e.v], "greedy_targets",
           "designated colors collide on " + edge_name(e));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == special) continue;
    expect(targets.f[v] - targets.t[v] == 2 * targets.k[v], "greedy_targets",
           "f - t != 2k at vertex " + std::to_string(v));
    const int want = sides[v] == Side::kT ? 1 : 0;
    expect(((targets.f[v] % 2) + 2) % 2 == want, "greedy_targets",
           "designated color parity at vertex " + std::to_string(v));
  }
  expect(targets.f[special] == targets.t[special], "splice_star_coloring",
         "special vertex color differs from its weighted degree");
}

Cut initial_cut(const Graph& h, const WeightOptions& options,
                CutSearchState& trace) {
  Cut cut;
  switch (options.cut_strategy) {
    case CutStrategy::kLocalSearch:
      cut = local_search_cut(h, options.seed);
      trace.record(CutStep::kLocalSearch, cut.size());
      break;
    case CutStrategy::kExact:
      cut = exact_max_cut(h, options.exact_cut_threshold);
      trace.record(CutStep::kExact, cut.size());
      break;
    case CutStrategy::kRandomStart:
      cut = random_cut(h, options.seed);
      trace.record(CutStep::kRandomStart, cut.size());
      break;
  }
  return cut;
}

}  // namespace

ComponentResult weight_connected(const Graph& g, const WeightOptions& options) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) {
    throw PreconditionViolated(
        "weight_connected needs a connected graph with >= 3 vertices");
  }
  ComponentResult result;
  ComponentTrace& trace = result.trace;
  const Vertex special = find_non_articulation_vertex(g);
  const Vertex root = g.neighbors(special)[0];
  trace.special = special;
  trace.root = root;

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (v != special) rest.push_back(v);
  const Subgraph reduced = induced_subgraph(g, rest);
  const Graph& h = reduced.graph;
  trace.reduced_edge_count = h.edge_count();
  expect(is_connected(h), "find_non_articulation_vertex",
         "removing the special vertex disconnected the graph");

  Cut cut = initial_cut(h, options, trace.cut_search);
  cut = repair_cut_connectivity(h, std::move(cut), &trace.cut_search);

  for (;;) {
    ++trace.attempts;
    expect(trace.cut_search.improvement_count() <= h.edge_count(),
           "improve_cut_from_mincut", "cut grew more often than |E(H)|");

    std::vector<Side> sides(n, Side::kNone);
    for (Vertex v : rest) sides[v] = cut.side(reduced.to_local[v]);

    EdgeWeighting mu = initial_parity_weighting(g, special, sides, root);
    check_weights(g, mu, special, 1, 2, 2, 3, "initial_parity_weighting");
    {
      const EdgeId e0 = g.edge_id(special, root);
      for (Vertex w : g.neighbors(special)) {
        if (w != root) {
          expect(mu[g.edge_id(special, w)] == 2, "initial_parity_weighting",
                 "edge at the special vertex other than e0 changed");
        }
      }
      expect(mu[e0] == 1 || mu[e0] == 2, "initial_parity_weighting",
             "e0 outside {1,2}");
    }
    check_parity(g, mu, sides, special, "initial_parity_weighting");

    TargetAssignment targets = neighborhood_targets(g, special, mu);
    EdgeWeighting omega =
        splice_star_coloring(g, special, mu, targets, &trace.star_case);
    check_weights(g, omega, special, 1, 4, 2, 3, "splice_star_coloring");
    complete_targets(g, special, omega, targets);
    check_targets(g, targets, sides, special);

    const OrientedDemand demand = build_demand(g, targets, sides);
    OrientedDemand local_demand;
    for (const auto& a : demand.arcs) {
      local_demand.arcs.push_back(
          {reduced.to_local[a.tail], reduced.to_local[a.head]});
    }
    const FlowNetwork net = build_network(h, cut, local_demand);
    FlowResult flow = max_flow(net);
    if (flow.value < demand.size()) {
      trace.shortfalls.push_back(flow.value);
      std::vector<bool> source_side(flow.source_side.begin(),
                                    flow.source_side.begin() + h.vertex_count());
      cut = improve_cut_from_mincut(h, cut, source_side);
      trace.cut_search.record(CutStep::kMinCutImprove, cut.size());
      cut = repair_cut_connectivity(h, std::move(cut), &trace.cut_search);
      continue;
    }

    flow = cancel_opposite_arcs(std::move(flow), net);
    const auto node_paths = decompose_paths(flow, net);
    std::vector<std::vector<Vertex>> paths;
    for (const auto& p : node_paths) {
      std::vector<Vertex> path;
      for (std::size_t i = 1; i + 1 < p.size(); ++i)
        path.push_back(reduced.to_parent[p[i]]);
      paths.push_back(std::move(path));
    }
    omega = apply_path_modifications(g, std::move(omega), sides, paths);

    std::vector<int> out_arcs(n, 0);
    std::vector<int> in_arcs(n, 0);
    for (const auto& a : demand.arcs) {
      ++out_arcs[a.tail];
      ++in_arcs[a.head];
    }
    for (Vertex v : rest) {
      const int change = weighted_degree(g, omega, v) - targets.t[v];
      const int expected = sides[v] == Side::kS ? out_arcs[v] - in_arcs[v]
                                                : in_arcs[v] - out_arcs[v];
      expect(change == expected, "apply_path_modifications",
             "degree change at vertex " + std::to_string(v) +
                 " does not match the demand balance");
    }

    omega = finalize_demand_increment(g, std::move(omega), demand);
    check_weights(g, omega, special, 1, 4, 1, 4, "finalize_demand_increment");
    for (Vertex v = 0; v < n; ++v) {
      expect(weighted_degree(g, omega, v) == targets.f[v], "finalize_demand_increment",
             "weighted degree of vertex " + std::to_string(v) +
                 " misses its designated color");
    }

    trace.demand_size = demand.size();
    trace.flow_value = flow.value;
    trace.path_count = static_cast<int>(paths.size());
    for (Vertex v : rest) {
      (sides[v] == Side::kS ? trace.s_side : trace.t_side).push_back(v);
    }
    result.weights = std::move(omega);
    result.color = targets.f;
    result.sides = std::move(sides);
    return result;
  }
}

Certificate weight_graph(const Graph& g, const WeightOptions& options) {
  Certificate cert;
  cert.graph = g;
  cert.seed = options.seed;
  cert.weights = EdgeWeighting(g.edge_count(), 0);
  cert.color.assign(g.vertex_count(), 0);
  cert.sides.assign(g.vertex_count(), Side::kNone);

  for (auto& comp : validate(g)) {
    ComponentTrace trace;
    if (comp.kind == ComponentClass::kWeightable) {
      Subgraph sub = induced_subgraph(g, comp.vertices);
      ComponentResult local = weight_connected(sub.graph, options);
      trace = std::move(local.trace);
      auto lift = [&](Vertex v) { return sub.to_parent[v]; };
      trace.special = lift(trace.special);
      trace.root = lift(trace.root);
      for (auto& v : trace.s_side) v = lift(v);
      for (auto& v : trace.t_side) v = lift(v);
      for (EdgeId id = 0; id < sub.graph.edge_count(); ++id) {
        const Edge& e = sub.graph.edge(id);
        cert.weights[g.edge_id(lift(e.u), lift(e.v))] = local.weights[id];
      }
      for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) {
        cert.color[lift(v)] = local.color[v];
        cert.sides[lift(v)] = local.sides[v];
      }
    }
    trace.kind = comp.kind;
    trace.vertices = std::move(comp.vertices);
    cert.components.push_back(std::move(trace));
  }

  cert.verdict = verify_weighting(g, cert.weights);
  cert.weighted_degree = cert.verdict.weighted_degree;
  return cert;
}

}  // namespace vcw
