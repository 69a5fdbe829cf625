#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pnmax {

struct VerifyOptions {
  int max_n = 11;          // size cap for generated instances
  int graphs = 200;        // random connected graphs (inequality suite)
  int trees = 500;         // random trees (tree-bound suite)
  int triples = 200;       // random (graph, set, kind) triples (reductions)
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SuiteReport {
  std::string name;
  bool pass = true;
  std::string text;  // deterministic; no timings
};

// Closed forms vs the enumeration solver.
SuiteReport verify_formulas(const VerifyOptions& opts);

// The inequality chains plus the perfect/private domination relations on
// seeded random connected graphs; bipartite graphs also check
// ESPN >= ceil(n/2).
SuiteReport verify_inequalities(const VerifyOptions& opts);

// IPN(T) >= ceil(n/2): coronas with even spine are tight, all free trees
// up to order 10, and seeded random trees.
SuiteReport verify_tree_bound(const VerifyOptions& opts);

// Efficiency classes: cycle/path/prism characterizations, witness
// partitions, the structural I/S/IS classes against brute force, and
// construction round-trips.
SuiteReport verify_efficiency(const VerifyOptions& opts);

// reduce_to_class on random triples: subset, target predicate, score
// never drops.
SuiteReport verify_reductions(const VerifyOptions& opts);

std::vector<SuiteReport> verify_all(const VerifyOptions& opts);

}  // namespace pnmax
