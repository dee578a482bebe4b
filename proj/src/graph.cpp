#include "vcw/graph.hpp"

#include <algorithm>
#include <string>

#include "vcw/errors.hpp"

namespace vcw {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidGraph("edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} out of range for n=" +
                         std::to_string(n));
    }
    if (u == v) throw InvalidGraph("self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw InvalidGraph("duplicate edge {" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + "}");
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(2 * edges_.size());
  adj_edge_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  edge_index_.reserve(edges_.size());
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = id;
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = id;
    edge_index_.emplace(key(e.u, e.v), id);
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::pair<Vertex, EdgeId>> row;
    row.reserve(deg[v]);
    for (int i = offsets_[v]; i < offsets_[v + 1]; ++i)
      row.emplace_back(adj_[i], adj_edge_[i]);
    std::sort(row.begin(), row.end());
    for (int i = 0; i < deg[v]; ++i) {
      adj_[offsets_[v] + i] = row[i].first;
      adj_edge_[offsets_[v] + i] = row[i].second;
    }
  }
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::vector<Component> classify_components(const Graph& g) {
  std::vector<Component> out;
  for (auto& vs : connected_components(g)) {
    Component c;
    if (vs.size() == 1) {
      c.kind = ComponentClass::kIsolatedVertex;
    } else if (vs.size() == 2) {
      c.kind = ComponentClass::kK2;
    } else {
      c.kind = ComponentClass::kWeightable;
    }
    c.vertices = std::move(vs);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> validate(const Graph& g) {
  auto comps = classify_components(g);
  for (const auto& c : comps) {
    if (c.kind == ComponentClass::kK2)
      throw K2Component(c.vertices[0], c.vertices[1]);
  }
  return comps;
}

Vertex find_non_articulation_vertex(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionViolated("need at least two vertices");
  std::vector<int> tree_degree(n, 0);
  std::vector<bool> seen(n, false);
  // Iterative DFS: (vertex, next neighbor position).
  std::vector<std::pair<Vertex, int>> stack{{0, 0}};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto nbrs = g.neighbors(v);
    if (pos == static_cast<int>(nbrs.size())) {
      stack.pop_back();
      continue;
    }
    Vertex w = nbrs[pos++];
    if (seen[w]) continue;
    seen[w] = true;
    ++visited;
    ++tree_degree[v];
    ++tree_degree[w];
    stack.emplace_back(w, 0);
  }
  if (visited != n) throw PreconditionViolated("graph is not connected");
  for (Vertex v = 0; v < n; ++v)
    if (tree_degree[v] == 1) return v;
  throw InvariantViolation("find_non_articulation_vertex", "DFS tree has no leaf");
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  Subgraph sub;
  sub.to_local.assign(g.vertex_count(), -1);
  sub.to_parent.assign(vs.begin(), vs.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()),
                      sub.to_parent.end());
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i)
    sub.to_local[sub.to_parent[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = sub.to_local[e.u];
    Vertex b = sub.to_local[e.v];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), std::move(edges));
  return sub;
}

}  // namespace vcw
