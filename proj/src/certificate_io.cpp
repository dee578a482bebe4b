#include "vcw/certificate_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "vcw/errors.hpp"

namespace vcw {
namespace {

const char* side_name(Side s) {
  switch (s) {
    case Side::kS:
      return "S";
    case Side::kT:
      return "T";
    case Side::kNone:
      break;
  }
  return "-";
}

const char* class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::kIsolatedVertex:
      return "isolated";
    case ComponentClass::kK2:
      return "k2";
    case ComponentClass::kWeightable:
      return "weightable";
  }
  return "unknown";
}

template <typename Range>
void write_list(std::ostream& out, const Range& r) {
  for (const auto& x : r) out << ' ' << x;
}

}  // namespace

void write_certificate_text(std::ostream& out, const Certificate& cert,
                            CertificateFormat format) {
  const Graph& g = cert.graph;
  out << "vcw-certificate 1\n";
  out << "version " << cert.version << '\n';
  out << "seed " << cert.seed << '\n';
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    out << "weight " << g.edge(id).u << ' ' << g.edge(id).v << ' '
        << cert.weights[id] << '\n';
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << v << " degree " << cert.weighted_degree[v] << " color "
        << cert.color[v] << " side " << side_name(cert.sides[v]) << '\n';
  }
  for (std::size_t c = 0; c < cert.components.size(); ++c) {
    const ComponentTrace& t = cert.components[c];
    out << "component " << c << " class " << class_name(t.kind) << " vertices";
    write_list(out, t.vertices);
    out << '\n';
    if (t.kind != ComponentClass::kWeightable) continue;
    out << "component " << c << " special " << t.special << " root " << t.root
        << '\n';
    out << "component " << c << " S";
    write_list(out, t.s_side);
    out << '\n';
    out << "component " << c << " T";
    write_list(out, t.t_side);
    out << '\n';
    out << "component " << c << " cut-sizes";
    for (const auto& e : t.cut_search.history) out << ' ' << e.size;
    out << '\n';
    out << "component " << c << " demand " << t.demand_size << " flow "
        << t.flow_value << " paths " << t.path_count << '\n';
    if (format.trace) {
      out << "component " << c << " cut-steps";
      for (const auto& e : t.cut_search.history)
        out << ' ' << to_string(e.step) << ':' << e.size;
      out << '\n';
      out << "component " << c << " reduced-edges " << t.reduced_edge_count
          << " attempts " << t.attempts << " improvements "
          << t.cut_search.improvement_count() << '\n';
      out << "component " << c << " shortfalls";
      write_list(out, t.shortfalls);
      out << '\n';
      out << "component " << c << " star-case "
          << (t.star_case ? to_string(*t.star_case) : std::string("none"))
          << '\n';
    }
  }
  out << "verdict " << (cert.verdict.ok ? "ok" : "fail") << '\n';
  for (const Edge& e : cert.verdict.conflicts)
    out << "conflict " << e.u << ' ' << e.v << '\n';
}

void write_certificate_json(std::ostream& out, const Certificate& cert,
                            CertificateFormat format) {
  using nlohmann::ordered_json;
  const Graph& g = cert.graph;
  ordered_json doc;
  doc["format"] = "vcw-certificate";
  doc["format_version"] = 1;
  doc["version"] = cert.version;
  doc["seed"] = cert.seed;
  doc["graph"]["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    edges.push_back({g.edge(id).u, g.edge(id).v, cert.weights[id]});
  doc["graph"]["m"] = g.edge_count();
  doc["weights"] = std::move(edges);
  ordered_json vertices = ordered_json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"id", v},
                        {"degree", cert.weighted_degree[v]},
                        {"color", cert.color[v]},
                        {"side", side_name(cert.sides[v])}});
  }
  doc["vertices"] = std::move(vertices);
  ordered_json comps = ordered_json::array();
  for (const ComponentTrace& t : cert.components) {
    ordered_json c;
    c["class"] = class_name(t.kind);
    c["vertices"] = t.vertices;
    if (t.kind == ComponentClass::kWeightable) {
      c["special"] = t.special;
      c["root"] = t.root;
      c["S"] = t.s_side;
      c["T"] = t.t_side;
      ordered_json sizes = ordered_json::array();
      for (const auto& e : t.cut_search.history) sizes.push_back(e.size);
      c["cut_sizes"] = std::move(sizes);
      c["demand"] = t.demand_size;
      c["flow"] = t.flow_value;
      c["paths"] = t.path_count;
      if (format.trace) {
        ordered_json steps = ordered_json::array();
        for (const auto& e : t.cut_search.history)
          steps.push_back({{"step", to_string(e.step)}, {"size", e.size}});
        c["cut_steps"] = std::move(steps);
        c["reduced_edges"] = t.reduced_edge_count;
        c["attempts"] = t.attempts;
        c["improvements"] = t.cut_search.improvement_count();
        c["shortfalls"] = t.shortfalls;
        c["star_case"] = t.star_case ? to_string(*t.star_case) : "none";
      }
    }
    comps.push_back(std::move(c));
  }
  doc["components"] = std::move(comps);
  ordered_json conflicts = ordered_json::array();
  for (const Edge& e : cert.verdict.conflicts) conflicts.push_back({e.u, e.v});
  doc["verdict"] = {{"ok", cert.verdict.ok}, {"conflicts", std::move(conflicts)}};
  out << doc.dump(2) << '\n';
}

void write_weights(std::ostream& out, const Graph& g, const EdgeWeighting& w) {
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    out << g.edge(id).u << ' ' << g.edge(id).v << ' ' << w[id] << '\n';
}

namespace {

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return value;
}

}  // namespace

std::vector<WeightEntry> read_weight_entries(std::istream& in) {
  std::vector<WeightEntry> entries;
  std::string raw;
  int line = 0;
  bool certificate = false;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (first) {
      first = false;
      if (tok[0] == "vcw-certificate") {
        certificate = true;
        continue;
      }
    }
    if (certificate) {
      if (tok[0] != "weight") continue;
      if (tok.size() != 4) throw ParseError(line, "expected 'weight u v w'");
      entries.push_back({parse_int(tok[1], line), parse_int(tok[2], line),
                         parse_int(tok[3], line)});
      continue;
    }
    if (tok.size() != 3) throw ParseError(line, "expected 'u v w'");
    entries.push_back({parse_int(tok[0], line), parse_int(tok[1], line),
                       parse_int(tok[2], line)});
  }
  return entries;
}

std::vector<WeightEntry> read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_weight_entries(in);
}

}  // namespace vcw
