#pragma once

#include <optional>
#include <vector>

#include "pnmax/graph.hpp"
#include "pnmax/solver.hpp"

namespace pnmax {

// Which of the six efficiency classes a graph belongs to, each meaning
// that some set U turns every vertex into a private neighbor of the
// named flavors (equivalently the matching PN maximum equals the order).
// A realizing set is attached for each class present.
struct EfficiencyClass {
  bool es = false;   // ESPN == n: efficient dominating set exists
  bool eis = false;  // EISPN == n
  bool ei = false;   // EIPN == n
  bool i = false;    // disjoint union of K_2
  bool s = false;    // edgeless
  bool is = false;   // disjoint union of K_2 and isolated vertices
  std::optional<VertexSet> es_witness;
  std::optional<VertexSet> eis_witness;
  std::optional<VertexSet> ei_witness;
  std::optional<VertexSet> i_witness;
  std::optional<VertexSet> s_witness;
  std::optional<VertexSet> is_witness;
};

EfficiencyClass efficiency_classes(const Graph& g, const SolveOptions& opts = {});

// Constructive generator for connected EI- and EIS-efficient graphs.
// Parts are stars and double stars with marked vertices (double star:
// both centers; star with >= 2 leaves: center plus one leaf; plain star,
// EIS mode only: center alone); joins connect unmarked leaves.
enum class PartKind {
  DoubleStarPart,   // marked: both centers
  TwoMarkStarPart,  // star with >= 2 leaves; marked: center and leaf 1
  CenterStarPart,   // star of order >= 2; marked: center (EIS only)
};

struct ConstructionPart {
  PartKind kind;
  int p = 0;  // double star: leaves at each center; star: leaf count
  int q = 0;
};

struct ConstructionSpec {
  std::vector<ConstructionPart> parts;
  // joins as global vertex indices; parts are laid out sequentially with
  // the layout documented for each part kind in construct_efficient
  std::vector<std::pair<int, int>> joins;
};

enum class EfficiencyMode { Ei, Eis };

struct ConstructResult {
  Graph graph;
  VertexSet marked;                      // the witness dominating set
  std::vector<VertexSet> part_marked;    // marked set per part
  std::vector<std::pair<int, int>> part_ranges;  // [first, last] vertex per part
};

// Vertex layout: parts sequential. Double star with (p, q): center u,
// center v, p leaves of u, q leaves of v. Stars: center first, then
// leaves (for TwoMarkStarPart the first leaf is the marked one). Joins
// must touch only unmarked vertices, may not duplicate an existing edge,
// and the result must be connected.
ConstructResult construct_efficient(const ConstructionSpec& spec, EfficiencyMode mode);

}  // namespace pnmax
