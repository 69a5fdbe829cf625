#pragma once

#include "pnmax/kinds.hpp"
#include "pnmax/solver.hpp"

namespace pnmax {

// Column-profile dynamic program over the grid P_cols x P_rows. The
// profile of a column is its membership pattern plus a saturated (at two)
// member-neighbor count per row covering everything left of the next
// column, so a column's statuses finalize as soon as the next column's
// pattern is chosen. State space is (2*3)^rows per column, hence the
// rows <= 6 guard.
//
// A witness is reconstructed when cols*rows <= 64 or when force_witness
// is set; otherwise the solve is value-only and witness_available is
// false on the result.
SolveResult solve_pn_grid(int cols, int rows, ParameterKind kind,
                          bool force_witness = false);

constexpr int kGridMaxRows = 6;

}  // namespace pnmax
