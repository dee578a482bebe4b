#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "vcw/errors.hpp"
#include "vcw/generators.hpp"
#include "vcw/weighting.hpp"

using namespace vcw;

namespace {

Graph random_connected(Rng& rng, int n, double p) {
  for (;;) {
    Graph g = gen::gnp(n, p, rng.next());
    if (is_connected(g)) return g;
  }
}

// Cut of G minus the special vertex, lifted back to G ids.
struct Prepared {
  Vertex special;
  Vertex root;
  Subgraph reduced;
  Cut cut;
  std::vector<Side> sides;
};

Prepared prepare(const Graph& g, bool exact) {
  Prepared p;
  p.special = find_non_articulation_vertex(g);
  p.root = g.neighbors(p.special)[0];
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != p.special) rest.push_back(v);
  p.reduced = induced_subgraph(g, rest);
  const Graph& h = p.reduced.graph;
  p.cut = exact ? exact_max_cut(h) : local_search_cut(h);
  CutSearchState trace;
  p.cut = repair_cut_connectivity(h, p.cut, &trace);
  if (exact) CHECK(trace.history.empty());
  p.sides.assign(g.vertex_count(), Side::kNone);
  for (Vertex v : rest) p.sides[v] = p.cut.side(p.reduced.to_local[v]);
  return p;
}

bool parity_ok(const Graph& g, const EdgeWeighting& w, const std::vector<Side>& sides,
               Vertex special) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == special) continue;
    if ((weighted_degree(g, w, v) % 2 == 1) != (sides[v] == Side::kT)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parity pass on a three-vertex path") {
  const Graph p3 = gen::path(3);
  REQUIRE(find_non_articulation_vertex(p3) == 0);
  std::vector<Side> sides{Side::kNone, Side::kS, Side::kT};
  EdgeWeighting mu = initial_parity_weighting(p3, 0, sides, 1);
  CHECK(mu[p3.edge_id(1, 2)] == 3);
  CHECK(mu[p3.edge_id(0, 1)] == 1);
  CHECK(weighted_degree(p3, mu, 1) == 4);
  CHECK(weighted_degree(p3, mu, 2) == 3);
}

TEST_CASE("parity pass gives T leaves weight 3") {
  // H is a star centered at 1 with leaves 2, 3, 4; vertex 0 hangs off 2.
  Graph g(5, {{0, 2}, {1, 2}, {1, 3}, {1, 4}});
  std::vector<Side> sides{Side::kNone, Side::kS, Side::kT, Side::kT, Side::kT};
  EdgeWeighting mu = initial_parity_weighting(g, 0, sides, 2);
  CHECK(mu[g.edge_id(1, 3)] == 3);
  CHECK(mu[g.edge_id(1, 4)] == 3);
  CHECK(parity_ok(g, mu, sides, 0));
}

TEST_CASE("parity pass rejects a disconnected cut graph") {
  const Graph p4 = gen::path(4);
  std::vector<Side> sides{Side::kNone, Side::kS, Side::kS, Side::kT};
  CHECK_THROWS_AS(initial_parity_weighting(p4, 0, sides, 1), PreconditionViolated);
}

TEST_CASE("greedy blocks equal same-side values only") {
  const Graph k3 = gen::complete(3);
  EdgeWeighting mu(k3.edge_count(), 2);
  TargetAssignment t = neighborhood_targets(k3, 0, mu);
  CHECK(t.sequence == std::vector<Vertex>{0, 1, 2});
  CHECK(t.k[1] == 0);
  CHECK(t.precolor[1] == 4);
  CHECK(t.k[2] == 1);
  CHECK(t.precolor[2] == 6);
  CHECK(t.precolor[0] == 4);

  // Different parities never block each other.
  EdgeWeighting odd = mu;
  odd[k3.edge_id(1, 2)] = 3;
  odd[k3.edge_id(0, 2)] = 1;  // s(1) = 5, s(2) = 4
  TargetAssignment u = neighborhood_targets(k3, 0, odd);
  CHECK(u.k[2] == 0);
}

TEST_CASE("single-neighbor special vertex bypasses the star step") {
  const Graph p3 = gen::path(3);
  std::vector<Side> sides{Side::kNone, Side::kS, Side::kT};
  EdgeWeighting mu = initial_parity_weighting(p3, 0, sides, 1);
  TargetAssignment t = neighborhood_targets(p3, 0, mu);
  std::optional<StarCase> kind;
  EdgeWeighting omega = splice_star_coloring(p3, 0, mu, t, &kind);
  CHECK_FALSE(kind.has_value());
  CHECK(omega == mu);
  CHECK(t.f[0] == mu[p3.edge_id(0, 1)]);
  CHECK(t.f[1] == weighted_degree(p3, omega, 1));
  CHECK(t.f[1] > t.f[0]);
}

TEST_CASE("zero star increments leave the weighting unchanged") {
  const Graph k3 = gen::complete(3);
  EdgeWeighting mu(k3.edge_count(), 2);
  mu[k3.edge_id(0, 1)] = 1;
  mu[k3.edge_id(0, 2)] = 1;  // s(0) = 2, s(1) = s(2) = 3
  TargetAssignment t = neighborhood_targets(k3, 0, mu);
  std::optional<StarCase> kind;
  EdgeWeighting omega = splice_star_coloring(k3, 0, mu, t, &kind);
  REQUIRE(kind.has_value());
  CHECK(*kind == StarCase::kAllDistinct);
  CHECK(omega == mu);
  for (Vertex v = 0; v < 3; ++v) CHECK(t.f[v] == t.precolor[v]);
}

TEST_CASE("demand orientation depends on the side") {
  const Graph k3 = gen::complete(3);
  TargetAssignment t;
  t.sequence = {0, 1, 2};
  t.index = {0, 1, 2};
  t.k = {0, 0, 0};
  std::vector<Side> both_s{Side::kNone, Side::kS, Side::kS};
  CHECK(build_demand(k3, t, both_s).empty());

  t.k[2] = 1;
  auto s_demand = build_demand(k3, t, both_s);
  REQUIRE(s_demand.size() == 1);
  CHECK(s_demand.arcs[0].tail == 2);
  CHECK(s_demand.arcs[0].head == 1);

  std::vector<Side> both_t{Side::kNone, Side::kT, Side::kT};
  auto t_demand = build_demand(k3, t, both_t);
  REQUIRE(t_demand.size() == 1);
  CHECK(t_demand.arcs[0].tail == 1);
  CHECK(t_demand.arcs[0].head == 2);

  t.k[2] = 2;
  CHECK_THROWS_AS(build_demand(k3, t, both_s), InvariantViolation);
}

TEST_CASE("path modifications move degree only at the endpoints") {
  const Graph p4 = gen::path(4);
  std::vector<Side> sides{Side::kS, Side::kT, Side::kS, Side::kT};
  EdgeWeighting omega(p4.edge_count(), 2);
  auto before = weighted_degrees(p4, omega);
  EdgeWeighting after = apply_path_modifications(p4, omega, sides, {{0, 1, 2, 3}});
  auto now = weighted_degrees(p4, after);
  CHECK(now[0] == before[0] + 1);  // S start gains
  CHECK(now[1] == before[1]);
  CHECK(now[2] == before[2]);
  CHECK(now[3] == before[3] + 1);  // T end gains
  CHECK(after[0] == 3);
  CHECK(after[1] == 1);
  CHECK(after[2] == 3);

  EdgeWeighting same = apply_path_modifications(p4, omega, sides, {{2}});
  CHECK(same == omega);

  EdgeWeighting reverse = apply_path_modifications(p4, omega, sides, {{3, 2}});
  CHECK(weighted_degree(p4, reverse, 3) == before[3] - 1);  // T start loses
  CHECK(weighted_degree(p4, reverse, 2) == before[2] - 1);  // S end loses

  CHECK_THROWS_AS(apply_path_modifications(p4, omega, sides, {{0, 2}}),
                  InvariantViolation);
  EdgeWeighting low(p4.edge_count(), 1);
  CHECK_THROWS_AS(apply_path_modifications(p4, low, sides, {{1, 2}}),
                  InvariantViolation);
}

TEST_CASE("final increment") {
  const Graph k3 = gen::complete(3);
  EdgeWeighting omega(k3.edge_count(), 3);
  CHECK(finalize_demand_increment(k3, omega, {}) == omega);
  EdgeWeighting bumped = finalize_demand_increment(k3, omega, OrientedDemand{{{2, 1}}});
  CHECK(bumped[k3.edge_id(1, 2)] == 4);
  CHECK(bumped[k3.edge_id(0, 1)] == 3);
}

TEST_CASE("stage invariants on random graphs with maximum cuts") {
  Rng rng(77);
  int demands = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = 3 + static_cast<int>(rng.below(10));
    Graph g = random_connected(rng, n, 0.2 + 0.7 * rng.unit());
    Prepared p = prepare(g, true);
    const Vertex v0 = p.special;

    EdgeWeighting mu = initial_parity_weighting(g, v0, p.sides, p.root);
    CHECK(parity_ok(g, mu, p.sides, v0));
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      if (e == Edge{std::min(v0, p.root), std::max(v0, p.root)}) {
        CHECK((mu[id] == 1 || mu[id] == 2));
      } else if (e.u == v0 || e.v == v0) {
        CHECK(mu[id] == 2);
      } else {
        CHECK((mu[id] == 2 || mu[id] == 3));
      }
    }

    TargetAssignment t = neighborhood_targets(g, v0, mu);
    EdgeWeighting omega = splice_star_coloring(g, v0, mu, t);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      if (e.u == v0 || e.v == v0) {
        CHECK(omega[id] <= 4);
        CHECK(omega[id] >= 1);
      } else {
        CHECK((omega[id] == 2 || omega[id] == 3));
      }
    }
    complete_targets(g, v0, omega, t);
    for (const Edge& e : g.edges()) CHECK(t.f[e.u] != t.f[e.v]);
    CHECK(t.f[v0] == weighted_degree(g, omega, v0));
    for (Vertex v = 0; v < n; ++v) {
      if (v == v0) continue;
      CHECK(t.f[v] - t.t[v] == 2 * t.k[v]);
      CHECK((t.f[v] % 2 == 1) == (p.sides[v] == Side::kT));
      int earlier_same = 0;
      for (Vertex w : g.neighbors(v))
        if (w != v0 && p.sides[w] == p.sides[v] && t.index[w] < t.index[v])
          ++earlier_same;
      CHECK(earlier_same >= t.k[v]);
    }

    OrientedDemand demand = build_demand(g, t, p.sides);
    demands += demand.size();
    std::set<std::pair<Vertex, Vertex>> distinct;
    for (const auto& a : demand.arcs)
      distinct.insert(std::minmax(a.tail, a.head));
    CHECK(distinct.size() == static_cast<std::size_t>(demand.size()));

    OrientedDemand local;
    for (const auto& a : demand.arcs)
      local.arcs.push_back({p.reduced.to_local[a.tail], p.reduced.to_local[a.head]});
    FlowNetwork net = build_network(p.reduced.graph, p.cut, local);
    FlowResult flow = max_flow(net);
    CHECK(flow.value == demand.size());  // maximum cut: no shortfall
    flow = cancel_opposite_arcs(flow, net);
    std::vector<std::vector<Vertex>> paths;
    for (const auto& np : decompose_paths(flow, net)) {
      std::vector<Vertex> path;
      for (std::size_t i = 1; i + 1 < np.size(); ++i)
        path.push_back(p.reduced.to_parent[np[i]]);
      paths.push_back(path);
    }
    // Each path changes the degree of its endpoints only.
    EdgeWeighting walked = omega;
    for (const auto& path : paths) {
      auto before = weighted_degrees(g, walked);
      walked = apply_path_modifications(g, walked, p.sides, {path});
      auto after = weighted_degrees(g, walked);
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        CHECK(after[path[i]] == before[path[i]]);
    }
    std::vector<int> out(n, 0), in(n, 0);
    for (const auto& a : demand.arcs) {
      ++out[a.tail];
      ++in[a.head];
    }
    for (Vertex v = 0; v < n; ++v) {
      if (v == v0) continue;
      const int change = weighted_degree(g, walked, v) - t.t[v];
      CHECK(change == (p.sides[v] == Side::kS ? out[v] - in[v] : in[v] - out[v]));
    }
    EdgeWeighting final_w = finalize_demand_increment(g, walked, demand);
    for (Vertex v = 0; v < n; ++v) CHECK(weighted_degree(g, final_w, v) == t.f[v]);
    for (int w : final_w.values()) CHECK((w >= 1 && w <= 4));
  }
  CHECK(demands > 0);
}

TEST_CASE("end-to-end examples") {
  Certificate p3 = weight_graph(gen::path(3));
  CHECK(p3.verdict.ok);
  for (int w : p3.weights.values()) CHECK((w >= 1 && w <= 4));

  Certificate c5 = weight_graph(gen::cycle(5));
  CHECK(c5.verdict.ok);
  std::set<int> used(c5.weights.values().begin(), c5.weights.values().end());
  CHECK(used.size() >= 3);

  Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  Certificate two = weight_graph(triangles);
  CHECK(two.verdict.ok);
  REQUIRE(two.components.size() == 2);
  CHECK(two.components[0].special == 0);
  CHECK(two.components[1].special == 3);

  Graph with_isolated(4, {{0, 1}, {1, 2}});
  Certificate iso = weight_graph(with_isolated);
  CHECK(iso.verdict.ok);
  CHECK(iso.weighted_degree[3] == 0);
  CHECK(iso.components[1].kind == ComponentClass::kIsolatedVertex);

  CHECK_THROWS_AS(weight_graph(Graph(2, {{0, 1}})), K2Component);
  CHECK(weight_graph(Graph(0)).verdict.ok);
}

TEST_CASE("end-to-end on random graphs under every cut strategy") {
  Rng rng(1234);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng.below(12));
    Graph g = gen::gnp(n, rng.unit(), rng.next());
    bool k2 = false;
    for (const auto& c : classify_components(g))
      if (c.kind == ComponentClass::kK2) k2 = true;
    if (k2) continue;
    for (CutStrategy strategy :
         {CutStrategy::kLocalSearch, CutStrategy::kExact, CutStrategy::kRandomStart}) {
      WeightOptions opt;
      opt.cut_strategy = strategy;
      opt.seed = rng.next();
      Certificate cert = weight_graph(g, opt);
      CHECK(cert.verdict.ok);
      CHECK(parity_audit(g, cert.weights, cert.sides, -1));
      for (Vertex v = 0; v < n; ++v) CHECK(cert.weighted_degree[v] == cert.color[v]);
      for (int w : cert.weights.values()) CHECK((w >= 1 && w <= 4));
      for (const auto& c : cert.components) {
        CHECK(c.demand_size == c.flow_value);
        CHECK(c.cut_search.improvement_count() <= c.reduced_edge_count);
      }
    }
  }
}

TEST_CASE("weighting is deterministic") {
  Graph g = gen::gnp(12, 0.4, 5);
  Certificate a = weight_graph(g);
  Certificate b = weight_graph(g);
  CHECK(a.weights == b.weights);
}
