#pragma once

#include <string>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

// A graph whose center is adjacent to every other vertex, together with
// pre-colors that already separate every edge avoiding the center.
struct StarInstance {
  Graph graph;
  Vertex center = 0;
  std::vector<int> precolor;  // nonnegative, one per vertex
};

// Which branch of the construction produced h.
enum class StarCase {
  kAllDistinct,              // no vertex shares the center's pre-color
  kSingleMatch,              // exactly one same-parity vertex, equal to center
  kShiftBelow,               // suffix raise, matched vertices stay below
  kShiftAbove,               // suffix raise by one extra position
  kConsecutiveEven,          // same-parity values form a run of even length
  kConsecutiveOddNoEdge,     // odd run, middle pair not adjacent
  kConsecutiveOddTriangle,   // odd run, middle pair adjacent
};

inline constexpr int kStarCaseCount = 7;

std::string to_string(StarCase c);

// Edge increments h : E -> {0, 1, 2}, indexed by edge id of the instance
// graph. For every edge e = {u, v} not touching the center, h(e) is 0 when
// precolor(u) + precolor(v) is odd and at most 1 otherwise; every non-center
// vertex receives increment sum 0 or 2; and precolor + increment sum is a
// proper coloring.
struct StarColoring {
  StarCase kind = StarCase::kAllDistinct;
  std::vector<int> increment;       // per edge id
  std::vector<int> increment_sum;   // per vertex, s_h
  std::vector<int> color;           // per vertex, precolor + increment_sum
};

// Throws PreconditionViolated if the instance is malformed (fewer than three
// vertices, center not universal, negative pre-colors, or an edge avoiding
// the center whose endpoints share a pre-color).
void check_star_instance(const StarInstance& inst);

StarCase select_case(const StarInstance& inst);

StarColoring compute_h(const StarInstance& inst);

}  // namespace vcw
