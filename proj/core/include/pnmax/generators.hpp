#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pnmax/graph.hpp"

namespace pnmax {

// Deterministic splitmix64 generator; identical streams on every
// platform, which the seeded verification sweeps rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

// Uniform labeled tree on n vertices (decoded Pruefer sequence).
Graph random_tree(int n, Rng& rng);

// Random spanning tree plus independent extra edges; always connected.
Graph random_connected_graph(int n, double extra_edge_prob, Rng& rng);

// Random subset of the vertices of g.
VertexSet random_subset(int n, Rng& rng);

// All unlabeled (free) trees with 1..max_n vertices, deduplicated by a
// center-rooted canonical code, grown by leaf attachment.
std::vector<Graph> free_trees_up_to(int max_n);

// Invokes fn for every labeled graph on exactly n vertices whose edge set
// makes it connected. n is capped at 8 (2^28 candidate graphs).
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

// Number of labeled connected graphs on n vertices, n <= 8 (used to
// cross-check the enumerator).
std::uint64_t connected_graph_count(int n);

}  // namespace pnmax
