#pragma once

#include <iosfwd>
#include <string>

#include "vcw/graph.hpp"

namespace vcw {

// Reads either the canonical edge list ('#' comments, "n m", then m lines
// "u v", 0-based) or DIMACS ("c" comments, "p edge n m", "e u v", 1-based).
// The format is detected from the first non-comment line. Throws ParseError
// carrying the offending line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph(const std::string& text);

// Canonical edge-list format.
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace vcw
