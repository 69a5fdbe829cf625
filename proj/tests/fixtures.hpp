// Shared test graphs and hand-checked optimal configurations on the
// 8x3 grid (vertices numbered col*3 + row).
#pragma once

#include <vector>

#include "pnmax/families.hpp"
#include "pnmax/graph.hpp"
#include "pnmax/vertex_set.hpp"

namespace fixtures {

using pnmax::Graph;
using pnmax::VertexSet;

// Order-10 graph with IPN = 6 but strong matching number 2: two K_{1,3}
// gadgets whose centers a, b are adjacent, plus a vertex attached to two
// leaves on each side.
inline Graph ipn_gap_graph() {
  // u=0 x1=1 x2=2 x3=3 a=4 b=5 y1=6 y2=7 y3=8 v=9
  return pnmax::build_graph(10, {{4, 1},
                                 {4, 2},
                                 {4, 3},
                                 {5, 6},
                                 {5, 7},
                                 {5, 8},
                                 {0, 1},
                                 {0, 3},
                                 {9, 6},
                                 {9, 8},
                                 {4, 5}});
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);         // outer cycle
    edges.emplace_back(i, i + 5);               // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return Graph(10, edges);
}

inline VertexSet grid83_set(std::initializer_list<std::pair<int, int>> cells) {
  VertexSet s;
  for (auto [col, row] : cells) s.set(col * 3 + row);
  return s;
}

// Optimal configurations on P_8 box P_3, checked by hand against the
// published drawings; external count 16 for the first, full EISPN score
// 24 for the second.
inline VertexSet grid83_epn_optimal() {
  return grid83_set({{1, 0}, {5, 0}, {3, 1}, {0, 2}, {3, 2}, {6, 2}});
}

inline VertexSet grid83_eispn_optimal() {
  return grid83_set(
      {{2, 0}, {5, 0}, {6, 0}, {0, 1}, {0, 2}, {3, 2}, {4, 2}, {7, 2}});
}

}  // namespace fixtures
