#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw::gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
// Vertex 0 joined to 1..n-1.
Graph star(int n);
Graph grid(int rows, int cols);
// Erdos-Renyi G(n, p): each pair (u < v) in lexicographic order is kept with
// probability p.
Graph gnp(int n, double p, std::uint64_t seed);
// Configuration-model pairing, retried until simple. After max_attempts the
// last pairing is kept with loops and repeated pairs dropped.
Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts = 100);

// Labeled graph on n vertices whose edge set is the bit mask over the pairs
// (u < v) in lexicographic order.
Graph from_mask(int n, std::uint64_t mask);

// Dispatch by family name for the CLI. Throws std::invalid_argument on an
// unknown family or bad parameters.
Graph by_family(const std::string& family, const std::vector<std::string>& params,
                std::uint64_t seed);

}  // namespace vcw::gen
