#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pnmax/graph.hpp"

namespace pnmax {

enum class Family {
  Path,
  Cycle,
  Star,
  DoubleStar,
  Complete,
  CompleteBipartite,
  Grid,
  CoronaPath,
  EspnTree,
  Cartesian,
};

// Named-family descriptor. String grammar: "family:p1[,p2]", e.g.
// "grid:8,3" or "double_star:3,4". Products nest parenthesized specs:
// "cartesian:(path:8),(path:3)".
struct FamilySpec {
  Family family = Family::Path;
  std::vector<long> params;
  std::vector<FamilySpec> factors;  // Cartesian only

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

// Canonical vertex numbering per family:
//   path/cycle       sequential along the walk
//   star             center 0, leaves 1..n
//   double_star p q  centers 0,1; leaves of 0 are 2..p+1, of 1 are p+2..p+q+1
//   complete, complete_bipartite   first part then second part
//   grid n m         column-major blocks: (col c, row r) -> c*m + r,
//                    identical to cartesian_product(path n, path m)
//   corona_path m    pairs interleaved: spine u_i = 2i, pendant v_i = 2i+1
//   espn_tree k      blocks of five per spine vertex i: spine 5i, two leaves
//                    5i+1, 5i+2, then the pendant 2-chain 5i+3, 5i+4
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph double_star(int p, int q);
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
Graph grid_graph(int cols, int rows);
Graph corona_path(int m);
Graph espn_tree(int k);

}  // namespace pnmax
