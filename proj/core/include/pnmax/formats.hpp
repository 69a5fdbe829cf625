#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pnmax/graph.hpp"

namespace pnmax {

// Edge-list text format:
//   first non-comment line "n <order>", then one "u v" pair per line,
//   0-based indices; lines starting with '#' and blank lines are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6: 6-bit chunks of the upper adjacency triangle in column order
// (0,1),(0,2),(1,2),(0,3),..., each chunk offset by 63. Orders below 63
// use the one-byte header; 63..128 the "~" three-byte form. An optional
// ">>graph6<<" prefix is accepted on input.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace pnmax
