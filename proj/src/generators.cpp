#include "vcw/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vcw/rng.hpp"

namespace vcw::gen {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 0, "path: n must be >= 0");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  require(n >= 0, "complete: n must be >= 0");
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph star(int n) {
  require(n >= 1, "star: n must be >= 1");
  EdgeList e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, std::move(e));
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid: rows and cols must be >= 1");
  EdgeList e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, std::move(e));
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "gnp: n must be >= 0");
  require(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0, 1]");
  Rng rng(seed);
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
  require(n >= 1 && d >= 0 && d < n, "regular: need 0 <= d < n");
  require((static_cast<long long>(n) * d) % 2 == 0, "regular: n*d must be even");
  Rng rng(seed);
  EdgeList best;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vertex> points;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) points.push_back(v);
    for (std::size_t i = points.size(); i > 1; --i)
      std::swap(points[i - 1], points[rng.below(i)]);
    std::set<std::pair<Vertex, Vertex>> seen;
    EdgeList e;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      auto [u, v] = std::minmax(points[i], points[i + 1]);
      if (u == v || !seen.insert({u, v}).second) {
        simple = false;
        continue;
      }
      e.emplace_back(u, v);
    }
    if (simple) return Graph(n, std::move(e));
    best = std::move(e);
  }
  return Graph(n, std::move(best));
}

Graph from_mask(int n, std::uint64_t mask) {
  EdgeList e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph by_family(const std::string& family, const std::vector<std::string>& params,
                std::uint64_t seed) {
  auto arg = [&](std::size_t i) -> const std::string& {
    require(i < params.size(), family + ": missing parameter " + std::to_string(i + 1));
    return params[i];
  };
  auto integer = [&](std::size_t i) {
    std::size_t used = 0;
    int value = std::stoi(arg(i), &used);
    require(used == arg(i).size(), family + ": bad integer '" + arg(i) + "'");
    return value;
  };
  auto expect_count = [&](std::size_t count) {
    require(params.size() == count, family + ": expected " +
                                        std::to_string(count) + " parameters");
  };
  try {
    if (family == "path") return expect_count(1), path(integer(0));
    if (family == "cycle") return expect_count(1), cycle(integer(0));
    if (family == "complete") return expect_count(1), complete(integer(0));
    if (family == "star") return expect_count(1), star(integer(0));
    if (family == "grid") return expect_count(2), grid(integer(0), integer(1));
    if (family == "gnp") {
      expect_count(2);
      std::size_t used = 0;
      double p = std::stod(arg(1), &used);
      require(used == arg(1).size(), "gnp: bad probability '" + arg(1) + "'");
      return gnp(integer(0), p, seed);
    }
    if (family == "regular") {
      expect_count(2);
      return random_regular(integer(0), integer(1), seed);
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(family + ": parameter out of range");
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace vcw::gen
