#include "pnmax/efficiency.hpp"

#include <stdexcept>

#include "pnmax/routing.hpp"

namespace pnmax {

EfficiencyClass efficiency_classes(const Graph& g, const SolveOptions& opts) {
  EfficiencyClass out;
  const int n = g.order();

  const SolveResult espn = solve_auto(g, ParameterKind::Espn, opts);
  const SolveResult eipn = solve_auto(g, ParameterKind::Eipn, opts);
  const SolveResult eispn = solve_auto(g, ParameterKind::Eispn, opts);
  if (espn.value == n) {
    out.es = true;
    if (espn.witness_available) out.es_witness = espn.witness;
  }
  if (eipn.value == n) {
    out.ei = true;
    if (eipn.witness_available) out.ei_witness = eipn.witness;
  }
  if (eispn.value == n) {
    out.eis = true;
    if (eispn.witness_available) out.eis_witness = eispn.witness;
  }

  bool all_deg1 = true, edgeless = true, all_le1 = true;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d != 1) all_deg1 = false;
    if (d != 0) edgeless = false;
    if (d > 1) all_le1 = false;
  }
  out.i = all_deg1;
  out.s = edgeless;
  out.is = all_le1;
  if (out.i) out.i_witness = g.all_vertices();
  if (out.s) out.s_witness = g.all_vertices();
  if (out.is) out.is_witness = g.all_vertices();
  return out;
}

ConstructResult construct_efficient(const ConstructionSpec& spec, EfficiencyMode mode) {
  if (spec.parts.empty()) {
    throw std::invalid_argument("construction needs at least one part");
  }
  std::vector<std::pair<int, int>> edges;
  VertexSet marked;
  std::vector<VertexSet> part_marked;
  std::vector<std::pair<int, int>> part_ranges;
  int at = 0;

  for (const auto& part : spec.parts) {
    const int base = at;
    VertexSet pm;
    switch (part.kind) {
      case PartKind::DoubleStarPart: {
        if (part.p < 1 || part.q < 1) {
          throw std::invalid_argument("double star part needs p, q >= 1");
        }
        const int u = base, v = base + 1;
        edges.emplace_back(u, v);
        for (int i = 0; i < part.p; ++i) edges.emplace_back(u, base + 2 + i);
        for (int i = 0; i < part.q; ++i) edges.emplace_back(v, base + 2 + part.p + i);
        pm.set(u).set(v);
        at = base + 2 + part.p + part.q;
        break;
      }
      case PartKind::TwoMarkStarPart: {
        if (part.p < 2) {
          throw std::invalid_argument("two-marked star part needs at least 2 leaves");
        }
        for (int i = 0; i < part.p; ++i) edges.emplace_back(base, base + 1 + i);
        pm.set(base).set(base + 1);
        at = base + 1 + part.p;
        break;
      }
      case PartKind::CenterStarPart: {
        if (mode == EfficiencyMode::Ei) {
          throw std::invalid_argument(
              "center-marked star parts are only valid in EIS mode");
        }
        if (part.p < 1) {
          throw std::invalid_argument("center-marked star part needs at least 1 leaf");
        }
        for (int i = 0; i < part.p; ++i) edges.emplace_back(base, base + 1 + i);
        pm.set(base);
        at = base + 1 + part.p;
        break;
      }
    }
    marked = marked | pm;
    part_marked.push_back(pm);
    part_ranges.emplace_back(base, at - 1);
  }

  Graph base_graph(at, edges);
  for (const auto& [u, v] : spec.joins) {
    if (u < 0 || u >= at || v < 0 || v >= at || u == v) {
      throw std::invalid_argument("join endpoints out of range");
    }
    if (marked.test(u) || marked.test(v)) {
      throw std::invalid_argument("joins may only touch unmarked vertices");
    }
    if (base_graph.adjacent(u, v)) {
      throw std::invalid_argument("duplicate join edge");
    }
    edges.emplace_back(u, v);
    base_graph = Graph(at, edges);
  }

  Graph result(at, edges);
  if (!is_connected(result)) {
    throw std::invalid_argument("construction result is not connected");
  }
  return {std::move(result), marked, std::move(part_marked), std::move(part_ranges)};
}

}  // namespace pnmax
