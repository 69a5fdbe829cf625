#pragma once

#include "pnmax/graph.hpp"
#include "pnmax/kinds.hpp"
#include "pnmax/solver.hpp"

namespace pnmax {

// Linear-time dynamic program over a rooted tree for any PN-maximization
// kind. Every private-neighbor status depends only on membership and the
// number of set neighbors capped at two, so the state per vertex is
// (membership, capped count of member children); a vertex's contribution
// is added once its parent's membership is fixed. The witness is rebuilt
// from back-pointers and is an optimal set, though not necessarily the
// lexicographically least one.
SolveResult solve_pn_tree(const Graph& t, ParameterKind kind);

struct TreeBoundReport {
  int order = 0;
  int ipn = 0;
  int bound = 0;  // ceil(n/2)
  bool holds = false;
  bool tight = false;  // 2*ipn == n
};

// Checks IPN(T) >= ceil(n/2) on a tree of order >= 2.
TreeBoundReport verify_tree_lower_bound(const Graph& t);

}  // namespace pnmax
