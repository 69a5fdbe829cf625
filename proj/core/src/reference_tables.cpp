#include "pnmax/reference_tables.hpp"

namespace pnmax {

namespace {

std::vector<ReferenceCell> build_cells() {
  std::vector<ReferenceCell> cells;
  auto row = [&cells](ParameterKind kind, int m, int first_n,
                      std::initializer_list<int> values) {
    int n = first_n;
    for (int v : values) cells.push_back({kind, m, n++, v});
  };

  row(ParameterKind::Ipn, 2, 2, {2, 4, 4, 6, 6, 8, 8, 10});
  row(ParameterKind::Ipn, 3, 3, {4, 7, 8, 10, 12, 13, 15});
  row(ParameterKind::Ipn, 4, 4, {8, 10, 12, 14, 16, 18});

  row(ParameterKind::Epn, 2, 2, {2, 4, 5, 7, 8, 10, 11, 13});
  row(ParameterKind::Epn, 3, 3, {6, 8, 10, 12, 15, 16, 19});
  row(ParameterKind::Epn, 4, 4, {12, 14, 17, 20});

  row(ParameterKind::Eipn, 2, 2, {4, 6, 8, 10, 12, 14, 16, 18});
  row(ParameterKind::Eipn, 3, 3, {8, 10, 14, 16, 20, 22, 25});
  row(ParameterKind::Eipn, 4, 4, {16, 18, 24, 28});

  row(ParameterKind::Espn, 2, 2, {3, 6, 7, 10, 11, 14, 15, 18});
  row(ParameterKind::Espn, 3, 3, {8, 11, 14, 16, 19, 22, 25});
  row(ParameterKind::Espn, 4, 4, {16, 18, 23, 27});

  row(ParameterKind::Ispn, 2, 2, {2, 4, 4, 6, 6, 8, 8, 10});
  row(ParameterKind::Ispn, 3, 3, {5, 7, 9, 10, 12, 14, 15});
  row(ParameterKind::Ispn, 4, 4, {8, 11, 12, 15});

  row(ParameterKind::Eispn, 2, 2, {4, 6, 8, 10, 12, 14, 16, 18});
  row(ParameterKind::Eispn, 3, 3, {8, 12, 14, 18, 21, 24, 27});
  row(ParameterKind::Eispn, 4, 4, {16, 20, 24, 28});

  return cells;
}

}  // namespace

const std::vector<ReferenceCell>& reference_grid_cells() {
  static const std::vector<ReferenceCell> cells = build_cells();
  return cells;
}

std::optional<int> reference_grid_value(ParameterKind kind, int rows, int cols) {
  for (const auto& c : reference_grid_cells()) {
    if (c.kind == kind && c.rows == rows && c.cols == cols) return c.value;
  }
  return std::nullopt;
}

}  // namespace pnmax
