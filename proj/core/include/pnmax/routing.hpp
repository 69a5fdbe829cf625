#pragma once

#include <optional>

#include "pnmax/families.hpp"
#include "pnmax/graph.hpp"
#include "pnmax/grid_dp.hpp"
#include "pnmax/solver.hpp"
#include "pnmax/tree_dp.hpp"

namespace pnmax {

// Picks the cheapest applicable exact method for a PN-maximization kind:
// a grid label routes to the profile DP (orienting the short side as
// rows), a tree to the tree DP, anything else to subset enumeration.
// Set-class and domination kinds always enumerate.
SolveResult solve_auto(const Graph& g, ParameterKind kind, const SolveOptions& opts = {});

// Grid dimensions (cols, rows) when the graph was generated as one.
std::optional<std::pair<int, int>> grid_dimensions(const Graph& g);

}  // namespace pnmax
