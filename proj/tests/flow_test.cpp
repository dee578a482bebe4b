#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "vcw/errors.hpp"
#include "vcw/flow.hpp"
#include "vcw/generators.hpp"
#include "vcw/rng.hpp"

using namespace vcw;

namespace {

struct ArcTuple {
  int tail;
  int head;
  friend auto operator<=>(const ArcTuple&, const ArcTuple&) = default;
};

std::vector<ArcTuple> arcs_of(const FlowNetwork& net) {
  std::vector<ArcTuple> out;
  for (const auto& a : net.arcs) out.push_back({a.tail, a.head});
  return out;
}

// K3 with S = {0}, T = {1, 2} and the demand edge {1, 2} oriented (1, 2).
FlowNetwork k3_network() {
  const Graph k3 = gen::complete(3);
  Cut cut = Cut::from_t_side(k3, std::vector<Vertex>{1, 2});
  OrientedDemand demand{{{1, 2}}};
  return build_network(k3, cut, demand);
}

}  // namespace

TEST_CASE("network without demand has two arcs per cut edge") {
  const Graph c4 = gen::cycle(4);
  Cut cut = Cut::from_t_side(c4, std::vector<Vertex>{1, 3});
  FlowNetwork net = build_network(c4, cut, {});
  CHECK(net.arcs.size() == 8);
  for (const auto& a : net.arcs) {
    CHECK(a.tail != net.source);
    CHECK(a.head != net.sink);
  }
  CHECK(max_flow(net).value == 0);
}

TEST_CASE("network for K3 follows the recipe literally") {
  FlowNetwork net = k3_network();
  const int s = net.source;
  const int t = net.sink;
  std::vector<ArcTuple> expected{{0, 1}, {1, 0}, {0, 2}, {2, 0}, {s, 1}, {2, t}};
  CHECK(arcs_of(net) == expected);
}

TEST_CASE("demand arcs sharing a tail give parallel source arcs") {
  // Star K1,3 plus edges among leaves: S = {1, 2, 3}, T = {0}.
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Cut cut = Cut::from_t_side(g, std::vector<Vertex>{0});
  OrientedDemand demand{{{1, 2}, {1, 3}}};
  FlowNetwork net = build_network(g, cut, demand);
  CHECK(std::count_if(net.arcs.begin(), net.arcs.end(), [&](const auto& a) {
          return a.tail == net.source && a.head == 1;
        }) == 2);
  CHECK(net.arcs.size() == 2 * 3 + 2 * 2);
  // Both demands have to leave vertex 1 through the single arc 1 -> 0.
  CHECK(max_flow(net).value == 1);
  CHECK(oracle::brute_force_max_flow(net) == 1);
}

TEST_CASE("network rejects demand edges crossing the cut") {
  const Graph k3 = gen::complete(3);
  Cut cut = Cut::from_t_side(k3, std::vector<Vertex>{1, 2});
  CHECK_THROWS_AS(build_network(k3, cut, OrientedDemand{{{0, 1}}}),
                  PreconditionViolated);
}

TEST_CASE("arc count is 2|cut| + 2|F| on random instances") {
  Rng rng(8);
  for (int round = 0; round < 100; ++round) {
    Graph g = gen::gnp(8, 0.5, rng.next());
    std::vector<Vertex> t_side;
    for (Vertex v = 0; v < 8; ++v)
      if (rng.coin()) t_side.push_back(v);
    Cut cut = Cut::from_t_side(g, t_side);
    OrientedDemand demand;
    for (const Edge& e : g.edges()) {
      if (cut.is_cut_edge(e) || !rng.coin()) continue;
      demand.arcs.push_back(rng.coin() ? OrientedDemand::Arc{e.u, e.v}
                                       : OrientedDemand::Arc{e.v, e.u});
    }
    FlowNetwork net = build_network(g, cut, demand);
    CHECK(net.arcs.size() ==
          static_cast<std::size_t>(2 * cut.size() + 2 * demand.size()));
  }
}

TEST_CASE("max flow on the K3 network") {
  FlowNetwork net = k3_network();
  FlowResult flow = max_flow(net);
  CHECK(flow.value == 1);
  auto paths = decompose_paths(cancel_opposite_arcs(flow, net), net);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == std::vector<int>{net.source, 1, 0, 2, net.sink});
}

TEST_CASE("no arc into the sink gives zero flow") {
  FlowNetwork net = FlowNetwork::with_terminals(2);
  net.add_arc(net.source, 0);
  net.add_arc(0, 1);
  FlowResult flow = max_flow(net);
  CHECK(flow.value == 0);
  CHECK(flow.source_side[net.source]);
  CHECK(flow.source_side[0]);
  CHECK(flow.source_side[1]);
  CHECK_FALSE(flow.source_side[net.sink]);
  CHECK(decompose_paths(flow, net).empty());
}

TEST_CASE("max flow equals brute force and the residual cut is minimum") {
  Rng rng(99);
  for (int round = 0; round < 300; ++round) {
    FlowNetwork net = oracle::random_network(rng, 4, 12);
    FlowResult flow = max_flow(net);
    CHECK(flow.value == oracle::brute_force_max_flow(net));
    CHECK(flow_value_if_feasible(net, flow.arc_flow) == flow.value);
    CHECK(cut_capacity(net, flow.source_side) == flow.value);
  }
}

TEST_CASE("cancel removes saturated antiparallel pairs") {
  FlowNetwork net = FlowNetwork::with_terminals(2);
  net.add_arc(0, 1);
  net.add_arc(1, 0);
  FlowResult both;
  both.arc_flow = {1, 1};
  CHECK(flow_value_if_feasible(net, both.arc_flow) == 0);
  FlowResult canceled = cancel_opposite_arcs(both, net);
  CHECK(canceled.arc_flow == std::vector<int>{0, 0});

  FlowResult one;
  one.arc_flow = {1, 0};
  CHECK(cancel_opposite_arcs(one, net).arc_flow == std::vector<int>{1, 0});
}

TEST_CASE("cancel preserves value and conservation") {
  Rng rng(4);
  int circulations = 0;
  for (int round = 0; round < 200; ++round) {
    Graph g = gen::gnp(7, 0.6, rng.next());
    std::vector<Vertex> t_side;
    for (Vertex v = 0; v < 7; ++v)
      if (rng.coin()) t_side.push_back(v);
    Cut cut = Cut::from_t_side(g, t_side);
    OrientedDemand demand;
    for (const Edge& e : g.edges())
      if (!cut.is_cut_edge(e) && rng.coin()) demand.arcs.push_back({e.u, e.v});
    FlowNetwork net = build_network(g, cut, demand);
    FlowResult flow = max_flow(net);
    // Add circulations on idle antiparallel pairs.
    for (int i = 0; i + 1 < 2 * cut.size(); i += 2) {
      if (flow.arc_flow[i] == 0 && flow.arc_flow[i + 1] == 0 && rng.coin()) {
        flow.arc_flow[i] = flow.arc_flow[i + 1] = 1;
        ++circulations;
      }
    }
    REQUIRE(flow_value_if_feasible(net, flow.arc_flow).has_value());
    FlowResult canceled = cancel_opposite_arcs(flow, net);
    CHECK(flow_value_if_feasible(net, canceled.arc_flow) == max_flow(net).value);
    for (int i = 0; i + 1 < 2 * cut.size(); i += 2)
      CHECK(canceled.arc_flow[i] + canceled.arc_flow[i + 1] <= 1);
  }
  CHECK(circulations > 0);
}

TEST_CASE("decomposition drops cycles away from the terminals") {
  FlowNetwork net = FlowNetwork::with_terminals(5);
  net.add_arc(net.source, 0);
  net.add_arc(0, 1);
  net.add_arc(1, net.sink);
  FlowResult flow = max_flow(net);
  auto clean = decompose_paths(flow, net);

  FlowNetwork with_cycle = net;
  with_cycle.add_arc(2, 3);
  with_cycle.add_arc(3, 4);
  with_cycle.add_arc(4, 2);
  FlowResult cyc = flow;
  cyc.arc_flow.insert(cyc.arc_flow.end(), {1, 1, 1});
  REQUIRE(flow_value_if_feasible(with_cycle, cyc.arc_flow) == 1);
  CHECK(decompose_paths(cyc, with_cycle) == clean);
}

TEST_CASE("decomposition erases loops that touch a path") {
  // s -> 0 -> 1 -> 2 -> 0 -> t: the loop 0 -> 1 -> 2 -> 0 is cut out.
  FlowNetwork net = FlowNetwork::with_terminals(3);
  net.add_arc(net.source, 0);
  net.add_arc(0, 1);
  net.add_arc(1, 2);
  net.add_arc(2, 0);
  net.add_arc(0, net.sink);
  FlowResult flow;
  flow.value = 1;
  flow.arc_flow = {1, 1, 1, 1, 1};
  auto paths = decompose_paths(flow, net);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == std::vector<int>{net.source, 0, net.sink});
}

TEST_CASE("decomposed paths are arc-disjoint and alternate sides") {
  Rng rng(21);
  for (int round = 0; round < 200; ++round) {
    Graph g = gen::gnp(9, 0.5, rng.next());
    std::vector<Vertex> t_side;
    for (Vertex v = 0; v < 9; ++v)
      if (rng.coin()) t_side.push_back(v);
    Cut cut = Cut::from_t_side(g, t_side);
    OrientedDemand demand;
    for (const Edge& e : g.edges())
      if (!cut.is_cut_edge(e) && rng.coin()) demand.arcs.push_back({e.v, e.u});
    FlowNetwork net = build_network(g, cut, demand);
    FlowResult flow = cancel_opposite_arcs(max_flow(net), net);
    auto paths = decompose_paths(flow, net);
    CHECK(static_cast<int>(paths.size()) == flow.value);
    std::vector<int> used(net.arcs.size(), 0);
    for (const auto& p : paths) {
      REQUIRE(p.size() >= 3);
      CHECK(p.front() == net.source);
      CHECK(p.back() == net.sink);
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        CHECK(p[i] < g.vertex_count());
        if (i + 2 < p.size()) CHECK(cut.side(p[i]) != cut.side(p[i + 1]));
      }
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        // Count one unit on some flow-carrying arc p[i] -> p[i+1].
        bool matched = false;
        for (std::size_t a = 0; a < net.arcs.size() && !matched; ++a) {
          if (net.arcs[a].tail == p[i] && net.arcs[a].head == p[i + 1] &&
              used[a] < flow.arc_flow[a]) {
            ++used[a];
            matched = true;
          }
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("network dump lists every arc") {
  std::ostringstream out;
  dump_network(out, k3_network());
  CHECK(out.str() == "nodes 5 arcs 6\n0 1 1\n1 0 1\n0 2 1\n2 0 1\ns 1 1\n2 t 1\n");
}
