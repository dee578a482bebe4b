#include "vcw/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <vector>

#include "vcw/errors.hpp"

namespace vcw {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return value;
}

Graph build(long long n, long long m,
            std::vector<std::pair<Vertex, Vertex>> edges, int header_line) {
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, "header declares " + std::to_string(m) +
                                      " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

void add_edge(std::set<std::pair<Vertex, Vertex>>& seen,
              std::vector<std::pair<Vertex, Vertex>>& edges, long long u,
              long long v, int line) {
  if (u == v) throw ParseError(line, "self-loop");
  const std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)),
                                      static_cast<Vertex>(std::max(u, v))};
  if (!seen.insert(key).second) throw ParseError(line, "duplicate edge");
  edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

Graph parse_canonical(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  if (header.tokens.size() != 2)
    throw ParseError(header.number, "expected header 'n m'");
  long long n = to_int(header.tokens[0], header.number);
  long long m = to_int(header.tokens[1], header.number);
  if (n < 0 || m < 0 || n > (1LL << 30))
    throw ParseError(header.number, "invalid header values");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'u v'");
    long long u = to_int(l.tokens[0], l.number);
    long long v = to_int(l.tokens[1], l.number);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(l.number, "vertex id out of range");
    add_edge(seen, edges, u, v, l.number);
  }
  return build(n, m, std::move(edges), header.number);
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  if (header.tokens.size() != 4)
    throw ParseError(header.number, "expected 'p edge n m'");
  long long n = to_int(header.tokens[2], header.number);
  long long m = to_int(header.tokens[3], header.number);
  if (n < 0 || m < 0 || n > (1LL << 30))
    throw ParseError(header.number, "invalid header values");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[0] != "e")
      throw ParseError(l.number, "expected 'e u v'");
    long long u = to_int(l.tokens[1], l.number);
    long long v = to_int(l.tokens[2], l.number);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(l.number, "vertex id out of range");
    add_edge(seen, edges, u - 1, v - 1, l.number);
  }
  return build(n, m, std::move(edges), header.number);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::vector<Line> lines;
  std::optional<bool> dimacs;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = split(raw);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') continue;
    if (!dimacs) dimacs = tokens[0] == "p" || tokens[0] == "c";
    if (*dimacs && tokens[0] == "c") continue;
    lines.push_back({number, std::move(tokens)});
  }
  if (lines.empty()) throw ParseError(number, "missing header");
  if (*dimacs) {
    if (lines.front().tokens[0] != "p")
      throw ParseError(lines.front().number, "expected 'p edge n m'");
    return parse_dimacs(lines);
  }
  return parse_canonical(lines);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_graph(in);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace vcw
