#pragma once

#include "pnmax/graph.hpp"
#include "pnmax/kinds.hpp"
#include "pnmax/vertex_set.hpp"

namespace pnmax {

// Classification of one vertex relative to a set U. A vertex w is a
// private neighbor when it has exactly one neighbor in U; the flavor
// records on which side of U it sits, with the isolated-in-G[U] members
// counted as their own ("self") private neighbors.
enum class VertexPnStatus {
  SelfPrivate,           // in U, no U-neighbor
  InternalPrivate,       // in U, exactly one U-neighbor
  ExternalPrivate,       // outside U, exactly one U-neighbor
  InsideUnclassified,    // in U, two or more U-neighbors
  OutsideUnclassified,   // outside U, zero or two-plus U-neighbors
};

// PN(U) = (S(U), I(U), E(U)).
struct PnTriple {
  int self_count = 0;
  int internal_count = 0;
  int external_count = 0;

  friend bool operator==(const PnTriple&, const PnTriple&) = default;
};

enum class PnFlavor { External, Internal, Self };

struct PnWitness {
  bool found = false;
  int witness = -1;  // least qualifying vertex; v itself for Self
};

VertexPnStatus vertex_status(const Graph& g, const VertexSet& u, int v);

PnTriple pn_triple(const Graph& g, const VertexSet& u);

// Sum of the PnTriple components selected by the kind's mask; the
// quantity the PN-maximization solvers maximize. Throws unless kind is a
// PN-maximization kind.
int pn_score(const Graph& g, const VertexSet& u, ParameterKind kind);
int pn_score(const PnTriple& t, ParameterKind kind);

// Does v (a member of u) have a private neighbor of the given flavor?
// External: some w outside u with N(w) ∩ u = {v}. Internal: such a w
// inside u. Self: v has no neighbor in u. Witness is the least such w.
PnWitness has_private_neighbor(const Graph& g, const VertexSet& u, int v,
                               PnFlavor flavor);

// Defining predicate of a set-class or domination kind, evaluated
// directly from the definitions. For UPPER_GAMMA and UPPER_GAMMA_PVT the
// predicate includes minimality: removing any single vertex must break
// the defining property.
bool set_class_predicate(const Graph& g, const VertexSet& u, ParameterKind kind);

}  // namespace pnmax
