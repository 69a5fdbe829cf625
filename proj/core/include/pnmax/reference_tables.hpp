#pragma once

#include <optional>
#include <vector>

#include "pnmax/kinds.hpp"

namespace pnmax {

// Published reference values for the six PN maxima on P_n box P_m grids
// (m rows from 2 to 4, n columns from 2 to 9 where available). Cells the
// reference leaves blank are simply absent. Keyed dataset, versioned so
// cached results can be invalidated if it is ever revised.
inline constexpr const char* kReferenceTableVersion = "grid-tables-v1";

struct ReferenceCell {
  ParameterKind kind;
  int rows;  // m
  int cols;  // n
  int value;
};

const std::vector<ReferenceCell>& reference_grid_cells();

std::optional<int> reference_grid_value(ParameterKind kind, int rows, int cols);

}  // namespace pnmax
