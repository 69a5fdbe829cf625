#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnmax/vertex_set.hpp"

namespace pnmax {

// Simple undirected graph on vertices 0..n-1 with adjacency stored as one
// bit-vector per vertex. Immutable after construction; safe to share
// across threads.
class Graph {
 public:
  explicit Graph(int order, std::string label = "");
  Graph(int order, std::span<const std::pair<int, int>> edges, std::string label = "");

  int order() const { return order_; }
  int size() const { return size_; }

  const VertexSet& neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return neighbors(v).count(); }

  // Low 64 bits of the adjacency row; valid only when order() <= 64.
  std::uint64_t adjacency_word(int v) const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  VertexSet all_vertices() const { return VertexSet::full(order_); }

  std::vector<std::pair<int, int>> edges() const;

  bool has_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  void add_edge_checked(int u, int v);

  int order_ = 0;
  int size_ = 0;
  std::vector<VertexSet> adj_;
  std::string label_;
};

// Builds a graph from an explicit edge list. Endpoints must be in range
// and distinct; duplicate edges collapse silently.
Graph build_graph(int order, std::span<const std::pair<int, int>> edges,
                  std::string label = "");
Graph build_graph(int order, std::initializer_list<std::pair<int, int>> edges,
                  std::string label = "");

// Cartesian product: (a,x) ~ (b,y) iff (a==b and x~y) or (x==y and a~b).
// Vertex (a,x) is numbered a*h.order() + x.
Graph cartesian_product(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace pnmax
