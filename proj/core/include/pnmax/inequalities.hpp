#pragma once

#include <string>
#include <vector>

#include "pnmax/graph.hpp"
#include "pnmax/solver.hpp"

namespace pnmax {

struct Relation {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
  bool equal = false;
};

// Every provable relation between the computed invariants on one graph:
// the six PN chains, the seven set-class lower bounds, the perfect- and
// total-perfect-domination relations, and (on isolate-free graphs) the
// private domination chain.
struct InequalityReport {
  int order = 0;
  std::vector<Relation> relations;
  bool all_hold = true;
  int equalities = 0;

  // computed values, handy for callers
  int pn[kNumPnKinds] = {};
  int set_class[kNumSetClassKinds] = {};
};

InequalityReport verify_inequality_report(const Graph& g, const SolveOptions& opts = {});

}  // namespace pnmax
