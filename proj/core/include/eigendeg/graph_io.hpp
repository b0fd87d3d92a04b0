#pragma once

#include <string>
#include <string_view>

#include "eigendeg/graph.hpp"

namespace eigendeg {

/// Largest order representable with the single-byte graph6 size prefix.
inline constexpr int kMaxGraph6Order = 62;

/// graph6: one size byte n+63, then the upper triangle in graph6 bit order
/// packed MSB-first into 6-bit groups, each written as value+63. Padding
/// bits must be zero. Throws MalformedGraph6.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

/// Edge-list text: a header line "n <count>", then one "i j" pair per line
/// with 1-based labels. '#' starts a comment; blank lines are ignored.
/// Throws ParseError (with line number), InvalidVertex or SelfLoop.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace eigendeg
