#include "pnmax/routing.hpp"

namespace pnmax {

std::optional<std::pair<int, int>> grid_dimensions(const Graph& g) {
  if (g.label().rfind("grid:", 0) != 0) return std::nullopt;
  try {
    const FamilySpec spec = FamilySpec::parse(g.label());
    if (spec.family != Family::Grid) return std::nullopt;
    return std::make_pair(static_cast<int>(spec.params[0]),
                          static_cast<int>(spec.params[1]));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SolveResult solve_auto(const Graph& g, ParameterKind kind, const SolveOptions& opts) {
  if (is_pn_kind(kind)) {
    if (auto dims = grid_dimensions(g)) {
      auto [cols, rows] = *dims;
      if (rows > cols) std::swap(cols, rows);
      if (rows <= kGridMaxRows) {
        // The DP numbers vertices col*rows + r; that matches the graph's
        // own numbering only in the unswapped orientation, so a swapped
        // solve is value-only.
        SolveResult r = solve_pn_grid(cols, rows, kind);
        auto orig = *dims;
        if (orig.first != cols) r.witness_available = false;
        return r;
      }
    }
    if (is_tree(g)) return solve_pn_tree(g, kind);
    return solve_pn(g, kind, opts);
  }
  return solve_set_class(g, kind, opts);
}

}  // namespace pnmax
