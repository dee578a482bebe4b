#include "vcw/flow.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <string>

#include "vcw/errors.hpp"

namespace vcw {

FlowNetwork FlowNetwork::with_terminals(int vertex_count) {
  FlowNetwork net;
  net.node_count = vertex_count + 2;
  net.source = vertex_count;
  net.sink = vertex_count + 1;
  return net;
}

int FlowNetwork::add_arc(int tail, int head, int capacity) {
  arcs.push_back({tail, head, capacity});
  return static_cast<int>(arcs.size()) - 1;
}

FlowNetwork build_network(const Graph& h, const Cut& cut,
                          const OrientedDemand& demand) {
  FlowNetwork net = FlowNetwork::with_terminals(h.vertex_count());
  for (EdgeId id : cut.cut_edges()) {
    const Edge& e = h.edge(id);
    net.add_arc(e.u, e.v);
    net.add_arc(e.v, e.u);
  }
  for (const auto& a : demand.arcs) {
    if (!h.has_edge(a.tail, a.head)) {
      throw PreconditionViolated("demand edge {" + std::to_string(a.tail) +
                                 "," + std::to_string(a.head) +
                                 "} is not an edge");
    }
    if (cut.side(a.tail) == Side::kNone || cut.side(a.tail) != cut.side(a.head)) {
      throw PreconditionViolated("demand edge {" + std::to_string(a.tail) +
                                 "," + std::to_string(a.head) +
                                 "} is not a same-side edge");
    }
    net.add_arc(net.source, a.tail);
    net.add_arc(a.head, net.sink);
  }
  return net;
}

namespace {

// Residual adjacency: for each node, (arc index, forward) in arc order.
struct Residual {
  std::vector<std::vector<std::pair<int, bool>>> out;

  explicit Residual(const FlowNetwork& net) : out(net.node_count) {
    for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) {
      out[net.arcs[i].tail].emplace_back(i, true);
      out[net.arcs[i].head].emplace_back(i, false);
    }
  }
};

std::vector<bool> residual_reachable(const FlowNetwork& net, const Residual& res,
                                     const std::vector<int>& flow) {
  std::vector<bool> seen(net.node_count, false);
  std::queue<int> q;
  seen[net.source] = true;
  q.push(net.source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [arc, forward] : res.out[v]) {
      const auto& a = net.arcs[arc];
      const bool open = forward ? flow[arc] < a.capacity : flow[arc] > 0;
      const int w = forward ? a.head : a.tail;
      if (open && !seen[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  return seen;
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  FlowResult result;
  result.arc_flow.assign(net.arcs.size(), 0);
  Residual res(net);
  std::vector<std::pair<int, bool>> via(net.node_count);
  for (;;) {
    std::vector<bool> seen(net.node_count, false);
    std::queue<int> q;
    seen[net.source] = true;
    q.push(net.source);
    while (!q.empty() && !seen[net.sink]) {
      int v = q.front();
      q.pop();
      for (auto [arc, forward] : res.out[v]) {
        const auto& a = net.arcs[arc];
        const bool open =
            forward ? result.arc_flow[arc] < a.capacity : result.arc_flow[arc] > 0;
        const int w = forward ? a.head : a.tail;
        if (open && !seen[w]) {
          seen[w] = true;
          via[w] = {arc, forward};
          q.push(w);
        }
      }
    }
    if (!seen[net.sink]) break;
    int bottleneck = INT32_MAX;
    for (int v = net.sink; v != net.source;) {
      auto [arc, forward] = via[v];
      const auto& a = net.arcs[arc];
      bottleneck = std::min(bottleneck, forward ? a.capacity - result.arc_flow[arc]
                                                : result.arc_flow[arc]);
      v = forward ? a.tail : a.head;
    }
    for (int v = net.sink; v != net.source;) {
      auto [arc, forward] = via[v];
      const auto& a = net.arcs[arc];
      result.arc_flow[arc] += forward ? bottleneck : -bottleneck;
      v = forward ? a.tail : a.head;
    }
    result.value += bottleneck;
  }
  result.source_side = residual_reachable(net, res, result.arc_flow);
  return result;
}

FlowResult cancel_opposite_arcs(FlowResult flow, const FlowNetwork& net) {
  // Pair up arcs (u, v) with arcs (v, u) and remove the common flow.
  std::map<std::pair<int, int>, std::vector<int>> by_ends;
  for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i)
    by_ends[{net.arcs[i].tail, net.arcs[i].head}].push_back(i);
  for (auto& [ends, forward_arcs] : by_ends) {
    if (ends.first > ends.second) continue;
    auto it = by_ends.find({ends.second, ends.first});
    if (it == by_ends.end()) continue;
    auto& backward_arcs = it->second;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < forward_arcs.size() && j < backward_arcs.size()) {
      int& f = flow.arc_flow[forward_arcs[i]];
      int& b = flow.arc_flow[backward_arcs[j]];
      if (f == 0) {
        ++i;
        continue;
      }
      if (b == 0) {
        ++j;
        continue;
      }
      const int common = std::min(f, b);
      f -= common;
      b -= common;
    }
  }
  flow.paths.clear();
  return flow;
}

std::vector<std::vector<int>> decompose_paths(const FlowResult& flow,
                                              const FlowNetwork& net) {
  std::vector<int> remaining = flow.arc_flow;
  // Outgoing arcs per node sorted by (head, arc index).
  std::vector<std::vector<int>> out(net.node_count);
  for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i)
    out[net.arcs[i].tail].push_back(i);
  for (auto& arcs : out) {
    std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
      return std::pair(net.arcs[a].head, a) < std::pair(net.arcs[b].head, b);
    });
  }
  auto next_arc = [&](int v) {
    for (int arc : out[v])
      if (remaining[arc] > 0) return arc;
    return -1;
  };

  std::vector<std::vector<int>> paths;
  for (int k = 0; k < flow.value; ++k) {
    std::vector<int> path{net.source};
    std::vector<int> position(net.node_count, -1);
    position[net.source] = 0;
    int v = net.source;
    int guard = 0;
    while (v != net.sink) {
      const int arc = next_arc(v);
      if (arc < 0 || ++guard > static_cast<int>(net.arcs.size())) {
        throw InvariantViolation("decompose_paths",
                                 "flow is not conserved at node " +
                                     std::to_string(v) + " after " +
                                     std::to_string(k) + " paths");
      }
      --remaining[arc];
      const int w = net.arcs[arc].head;
      if (position[w] >= 0) {
        // Erase the closed loop back to w.
        for (std::size_t i = position[w] + 1; i < path.size(); ++i)
          position[path[i]] = -1;
        path.resize(position[w] + 1);
      } else {
        position[w] = static_cast<int>(path.size());
        path.push_back(w);
      }
      v = w;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

int cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side) {
  int total = 0;
  for (const auto& a : net.arcs)
    if (source_side[a.tail] && !source_side[a.head]) total += a.capacity;
  return total;
}

std::optional<int> flow_value_if_feasible(const FlowNetwork& net,
                                          const std::vector<int>& arc_flow) {
  if (arc_flow.size() != net.arcs.size()) return std::nullopt;
  std::vector<int> balance(net.node_count, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (arc_flow[i] < 0 || arc_flow[i] > net.arcs[i].capacity) return std::nullopt;
    balance[net.arcs[i].tail] -= arc_flow[i];
    balance[net.arcs[i].head] += arc_flow[i];
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v != net.source && v != net.sink && balance[v] != 0) return std::nullopt;
  }
  return -balance[net.source];
}

void dump_network(std::ostream& out, const FlowNetwork& net) {
  auto name = [&](int v) {
    if (v == net.source) return std::string("s");
    if (v == net.sink) return std::string("t");
    return std::to_string(v);
  };
  out << "nodes " << net.node_count << " arcs " << net.arcs.size() << '\n';
  for (const auto& a : net.arcs)
    out << name(a.tail) << ' ' << name(a.head) << ' ' << a.capacity << '\n';
}

}  // namespace vcw
