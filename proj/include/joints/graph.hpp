#pragma once

#include "joints/vertex_set.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace joints {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Immutable undirected simple graph with dense bitset adjacency.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(rows_.size()); }
  std::uint64_t edge_count() const { return edge_count_; }
  int degree(int u) const { return degrees_[static_cast<std::size_t>(u)]; }
  int min_degree() const;
  int max_degree() const;
  const std::vector<int>& degrees() const { return degrees_; }

  const VertexSet& neighbors(int u) const { return rows_[static_cast<std::size_t>(u)]; }
  bool has_edge(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return rows_ == o.rows_; }

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  std::uint64_t edge_count_ = 0;
};

/// Mutable adjacency used to assemble a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int n() const { return static_cast<int>(rows_.size()); }
  /// Validates endpoints; duplicate edges collapse.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  Graph build() const;

 private:
  void check(int u, int v) const;

  std::vector<VertexSet> rows_;
};

Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::span<const std::pair<int, int>> edges);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph relabeled to i.
  std::vector<int> original;

  Edge lift(Edge e) const { return Edge::of(original[static_cast<std::size_t>(e.u)], original[static_cast<std::size_t>(e.v)]); }
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// Gamma(u) & Gamma(v).
VertexSet common_neighborhood(const Graph& g, int u, int v);

/// Number of edges with both endpoints in s.
std::uint64_t edges_within(const Graph& g, const VertexSet& s);

/// Vertex removal order produced by repeatedly deleting a minimum-degree vertex.
struct PeelTrace {
  std::vector<int> order;
  /// degrees[i] = degree of order[i] at removal = min degree of G_i.
  std::vector<int> degrees;
  /// edges_remaining[i] = e(G_i), G_i = G with order[0..i) removed; i = 0..n-1.
  std::vector<std::uint64_t> edges_remaining;

  /// Vertices of G_i, i.e. all except the first i removed.
  VertexSet remaining_after(int i, int n) const;
};

/// Ties are broken by the lowest vertex index.
PeelTrace peel(const Graph& g);

}  // namespace joints
