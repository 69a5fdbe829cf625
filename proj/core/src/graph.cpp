#include "pnmax/graph.hpp"

#include <stdexcept>

namespace pnmax {

Graph::Graph(int order, std::string label)
    : order_(order), adj_(static_cast<std::size_t>(order < 0 ? 0 : order)),
      label_(std::move(label)) {
  if (order < 0 || order > VertexSet::kMaxVertices) {
    throw std::invalid_argument("graph order must be in [0, 128], got " +
                                std::to_string(order));
  }
}

Graph::Graph(int order, std::span<const std::pair<int, int>> edges, std::string label)
    : Graph(order, std::move(label)) {
  for (const auto& [u, v] : edges) add_edge_checked(u, v);
}

void Graph::add_edge_checked(int u, int v) {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) {
    throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                "," + std::to_string(v) + ") with order " +
                                std::to_string(order_));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  }
  if (adj_[u].test(v)) return;  // duplicate collapses
  adj_[u].set(v);
  adj_[v].set(u);
  ++size_;
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = neighbors(v);
  s.set(v);
  return s;
}

bool Graph::adjacent(int u, int v) const { return neighbors(u).test(v); }

std::uint64_t Graph::adjacency_word(int v) const {
  return neighbors(v).low_word();
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size_);
  for (int u = 0; u < order_; ++u) {
    for (int v : adj_[u].vertices()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < order_; ++v) {
    if (adj_[v].empty()) return true;
  }
  return false;
}

Graph build_graph(int order, std::span<const std::pair<int, int>> edges,
                  std::string label) {
  return Graph(order, edges, std::move(label));
}

Graph build_graph(int order, std::initializer_list<std::pair<int, int>> edges,
                  std::string label) {
  return Graph(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()),
               std::move(label));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const long long n = static_cast<long long>(g.order()) * h.order();
  if (n > VertexSet::kMaxVertices) {
    throw std::invalid_argument("cartesian product order " + std::to_string(n) +
                                " exceeds the representable width of 128");
  }
  std::vector<std::pair<int, int>> edges;
  const int hn = h.order();
  for (int a = 0; a < g.order(); ++a) {
    for (int x = 0; x < hn; ++x) {
      const int idx = a * hn + x;
      for (int y : h.neighbors(x).vertices()) {
        if (y > x) edges.emplace_back(idx, a * hn + y);
      }
      for (int b : g.neighbors(a).vertices()) {
        if (b > a) edges.emplace_back(idx, b * hn + x);
      }
    }
  }
  std::string label;
  if (!g.label().empty() && !h.label().empty()) {
    label = "cartesian:(" + g.label() + "),(" + h.label() + ")";
  }
  return Graph(static_cast<int>(n), edges, label);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v).without(seen).vertices()) {
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen == g.all_vertices();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("relabel permutation size mismatch");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges, g.label());
}

}  // namespace pnmax
