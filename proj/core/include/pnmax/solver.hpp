#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pnmax/graph.hpp"
#include "pnmax/kinds.hpp"
#include "pnmax/pn.hpp"

namespace pnmax {

enum class SolveMethod { Enumeration, BranchAndBound, TreeDp, GridDp, Formula };

std::string method_name(SolveMethod m);

struct SolveOptions {
  int max_width = 26;      // largest order the subset solvers accept
  int parallel_shards = 1; // worker count; results are shard-count independent
  bool use_bounds = false; // branch-and-bound instead of the plain sweep
};

// Outcome of one exact solve. For PN-maximization kinds value is the
// maximum score and witness the lexicographically-least optimal set (the
// structured DPs return some optimal witness instead). For set classes
// value is the optimal cardinality, except ALPHA_STAR which reports the
// number of matched edges |U|/2. feasible is false when no qualifying set
// exists (total perfect domination, private domination with isolates).
// only_trivial marks perfect-domination solves where the whole vertex set
// is the only qualifying set.
struct SolveResult {
  int value = 0;
  VertexSet witness;
  bool witness_available = true;
  bool feasible = true;
  bool only_trivial = false;
  std::uint64_t explored = 0;
  SolveMethod method = SolveMethod::Enumeration;
};

// Maximum of pn_score over all vertex subsets.
SolveResult solve_pn(const Graph& g, ParameterKind kind, const SolveOptions& opts = {});

// All seven PN maxima from a single sweep, indexed like kPnKinds.
std::array<SolveResult, kNumPnKinds> solve_pn_all(const Graph& g,
                                                  const SolveOptions& opts = {});

// Optimal cardinality of a set-class or domination kind.
SolveResult solve_set_class(const Graph& g, ParameterKind kind,
                            const SolveOptions& opts = {});

// All seven irredundance-type set classes from a single sweep.
std::array<SolveResult, kNumSetClassKinds> solve_set_class_all(
    const Graph& g, const SolveOptions& opts = {});

// Repeatedly removes the least vertex violating the set-class condition
// paired with the kind (EPN->OIR, ESPN->IR, EIPN->OOIR, ISPN->ALPHA1,
// EISPN->COIR) until the condition holds. The result is a subset of a
// whose kind score is at least that of a.
VertexSet reduce_to_class(const Graph& g, const VertexSet& a, ParameterKind kind);

// The set class guaranteed by reduce_to_class for the given kind.
ParameterKind reduction_target(ParameterKind kind);

}  // namespace pnmax
