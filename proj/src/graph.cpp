#include "joints/graph.hpp"

#include "joints/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace joints {

int Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n(); ++u)
    for (int v = rows_[static_cast<std::size_t>(u)].next(u); v >= 0; v = rows_[static_cast<std::size_t>(u)].next(v))
      out.push_back({u, v});
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParam, "negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows_) {}

void GraphBuilder::check(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw Error(ErrorKind::InvalidVertex, "vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") outside 0.." + std::to_string(n() - 1));
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
}

void GraphBuilder::add_edge(int u, int v) {
  check(u, v);
  rows_[static_cast<std::size_t>(u)].insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
}

void GraphBuilder::remove_edge(int u, int v) {
  check(u, v);
  rows_[static_cast<std::size_t>(u)].erase(v);
  rows_[static_cast<std::size_t>(v)].erase(u);
}

bool GraphBuilder::has_edge(int u, int v) const {
  check(u, v);
  return rows_[static_cast<std::size_t>(u)].contains(v);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.rows_ = rows_;
  g.degrees_.resize(rows_.size());
  std::uint64_t twice = 0;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    g.degrees_[u] = static_cast<int>(rows_[u].count());
    twice += static_cast<std::uint64_t>(g.degrees_[u]);
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph make_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != static_cast<std::size_t>(g.n()))
    throw Error(ErrorKind::InvalidVertex, "vertex set universe does not match graph order");
  return induced_subgraph(g, keep.to_vector());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " not in graph");

  std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);

  GraphBuilder b(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& row = g.neighbors(sorted[i]);
    for (int w = row.next(sorted[i]); w >= 0; w = row.next(w))
      if (int j = relabel[static_cast<std::size_t>(w)]; j >= 0) b.add_edge(static_cast<int>(i), j);
  }
  return {b.build(), std::move(sorted)};
}

VertexSet common_neighborhood(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw Error(ErrorKind::InvalidVertex, "vertex outside graph");
  if (u == v) throw Error(ErrorKind::SelfLoop, "common neighborhood of a vertex with itself");
  return g.neighbors(u) & g.neighbors(v);
}

std::uint64_t edges_within(const Graph& g, const VertexSet& s) {
  std::uint64_t twice = 0;
  s.for_each([&](int w) { twice += bits::and_count(g.neighbors(w).words(), s.words()); });
  return twice / 2;
}

VertexSet PeelTrace::remaining_after(int i, int n) const {
  VertexSet s = VertexSet::full(static_cast<std::size_t>(n));
  for (int j = 0; j < i; ++j) s.erase(order[static_cast<std::size_t>(j)]);
  return s;
}

PeelTrace peel(const Graph& g) {
  const int n = g.n();
  PeelTrace trace;
  trace.order.reserve(static_cast<std::size_t>(n));
  trace.degrees.reserve(static_cast<std::size_t>(n));
  trace.edges_remaining.reserve(static_cast<std::size_t>(n));

  std::vector<int> degree = g.degrees();
  VertexSet alive = VertexSet::full(static_cast<std::size_t>(n));
  std::uint64_t edges = g.edge_count();
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_degree = std::numeric_limits<int>::max();
    alive.for_each([&](int v) {
      if (degree[static_cast<std::size_t>(v)] < best_degree) {
        best_degree = degree[static_cast<std::size_t>(v)];
        best = v;
      }
    });
    trace.order.push_back(best);
    trace.degrees.push_back(best_degree);
    trace.edges_remaining.push_back(edges);
    alive.erase(best);
    edges -= static_cast<std::uint64_t>(best_degree);
    (g.neighbors(best) & alive).for_each([&](int w) { --degree[static_cast<std::size_t>(w)]; });
  }
  return trace;
}

}  // namespace joints
