#include "pnmax/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pnmax {

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return build_graph(2, {{0, 1}});
  std::vector<int> pruefer(n - 2);
  for (auto& x : pruefer) x = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int x : pruefer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double extra_edge_prob, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<std::pair<int, int>> edges = tree.edges();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v) && rng.chance(extra_edge_prob)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

VertexSet random_subset(int n, Rng& rng) {
  VertexSet s;
  for (int v = 0; v < n; ++v) {
    if (rng.next() & 1) s.set(v);
  }
  return s;
}

namespace {

// AHU encoding rooted at v, parent excluded.
std::string ahu(const Graph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g.neighbors(v).vertices()) {
    if (w != parent) kids.push_back(ahu(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Graph& g) {
  const int n = g.order();
  if (n == 1) return {0};
  std::vector<int> degree(n), order;
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int w : g.neighbors(v).vertices()) {
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) centers.push_back(v);
  }
  return centers;
}

std::string tree_canonical(const Graph& g) {
  const auto centers = tree_centers(g);
  if (centers.size() == 1) return "V" + ahu(g, centers[0], -1);
  std::string a = ahu(g, centers[0], centers[1]);
  std::string b = ahu(g, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

}  // namespace

std::vector<Graph> free_trees_up_to(int max_n) {
  std::vector<Graph> out;
  if (max_n < 1) return out;
  std::vector<Graph> current = {Graph(1)};
  out.push_back(current[0]);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& t : current) {
      for (int v = 0; v < t.order(); ++v) {
        std::vector<std::pair<int, int>> edges = t.edges();
        edges.emplace_back(v, t.order());
        Graph grown(t.order() + 1, edges);
        std::string code = tree_canonical(grown);
        if (seen.insert(std::move(code)).second) next.push_back(grown);
      }
    }
    for (const Graph& t : next) out.push_back(t);
    current = std::move(next);
  }
  return out;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("exhaustive graph enumeration supports 1 <= n <= 8");
  }
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_list;
  pair_list.reserve(pairs);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) pair_list.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    edges.clear();
    for (int i = 0; i < pairs; ++i) {
      if ((mask >> i) & 1) edges.push_back(pair_list[i]);
    }
    Graph g(n, edges);
    if (is_connected(g)) fn(g);
  }
}

std::uint64_t connected_graph_count(int n) {
  // labeled connected graphs on n nodes, n = 1..8
  constexpr std::uint64_t counts[] = {0,     1,      1,         4,
                                      38,    728,    26704,     1866256,
                                      251548592};
  if (n < 1 || n > 8) throw std::invalid_argument("count available for 1 <= n <= 8");
  return counts[n];
}

}  // namespace pnmax
