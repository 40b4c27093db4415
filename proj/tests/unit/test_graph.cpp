#include "doctest.h"

#include "joints/edge_list.hpp"
#include "joints/error.hpp"
#include "joints/graph.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace joints;

namespace {

Graph complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("make_graph builds exactly the given edges") {
  const std::vector<std::pair<int, int>> tri{{0, 1}, {1, 2}, {0, 2}};
  Graph k3 = make_graph(3, tri);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.min_degree() == 2);

  const std::vector<std::pair<int, int>> none;
  Graph empty = make_graph(4, none);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.min_degree() == 0);

  const std::vector<std::pair<int, int>> dup{{0, 1}, {0, 1}, {1, 0}};
  CHECK(make_graph(4, dup).edge_count() == 1);
}

TEST_CASE("make_graph rejects bad vertices and loops") {
  const std::vector<std::pair<int, int>> out_of_range{{0, 3}};
  const std::vector<std::pair<int, int>> negative{{-1, 0}};
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  CHECK(kind_of([&] { make_graph(3, out_of_range); }) == ErrorKind::InvalidVertex);
  CHECK(kind_of([&] { make_graph(3, negative); }) == ErrorKind::InvalidVertex);
  CHECK(kind_of([&] { make_graph(3, loop); }) == ErrorKind::SelfLoop);
}

TEST_CASE("induced_subgraph relabels in sorted order") {
  auto k3 = induced_subgraph(complete(4), std::vector<int>{2, 0, 1});
  CHECK(k3.graph == complete(3));
  CHECK(k3.original == std::vector<int>{0, 1, 2});

  auto path = induced_subgraph(cycle(5), std::vector<int>{0, 1, 2});
  CHECK(path.graph.edge_count() == 2);
  CHECK(path.graph.has_edge(0, 1));
  CHECK(path.graph.has_edge(1, 2));
  CHECK_FALSE(path.graph.has_edge(0, 2));

  auto nothing = induced_subgraph(cycle(5), std::vector<int>{});
  CHECK(nothing.graph.n() == 0);

  auto lifted = induced_subgraph(cycle(5), std::vector<int>{1, 3, 4});
  CHECK(lifted.lift(Edge{1, 2}) == Edge{3, 4});

  CHECK(kind_of([&] { induced_subgraph(cycle(5), std::vector<int>{7}); }) == ErrorKind::InvalidVertex);
}

TEST_CASE("common_neighborhood") {
  CHECK(common_neighborhood(complete(5), 0, 1).to_vector() == std::vector<int>{2, 3, 4});
  CHECK(common_neighborhood(cycle(5), 0, 1).empty());
  // T_2(4) with classes {0,1},{2,3}: Gamma(0) = {2,3}, Gamma(2) = {0,1}
  const std::vector<std::pair<int, int>> k22{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK(common_neighborhood(make_graph(4, k22), 0, 2).empty());
  CHECK(kind_of([&] { common_neighborhood(complete(3), 1, 1); }) == ErrorKind::SelfLoop);
}

TEST_CASE("peel examples") {
  const std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
  PeelTrace t = peel(make_graph(4, star));
  CHECK(t.degrees == std::vector<int>{1, 1, 1, 0});
  CHECK(t.edges_remaining == std::vector<std::uint64_t>{3, 2, 1, 0});
  // after two leaves go, the centre and the last leaf tie at degree 1: lowest index first
  CHECK(t.order == std::vector<int>{1, 2, 0, 3});

  CHECK(peel(complete(3)).degrees == std::vector<int>{2, 1, 0});
  CHECK(peel(GraphBuilder(3).build()).degrees == std::vector<int>{0, 0, 0});
  CHECK(peel(Graph{}).order.empty());
}

TEST_CASE("randomized graph invariants") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = static_cast<int>(seed % 33);
    const Graph g = oracle::random_graph(n, 1 + seed % 7, 8, seed);
    const auto m = oracle::matrix_of(g);

    std::uint64_t degree_sum = 0;
    for (int u = 0; u < n; ++u) {
      REQUIRE_FALSE(g.has_edge(u, u));
      for (int v = 0; v < n; ++v) REQUIRE(g.has_edge(u, v) == g.has_edge(v, u));
      degree_sum += static_cast<std::uint64_t>(g.degree(u));
    }
    REQUIRE(degree_sum == 2 * g.edge_count());

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    REQUIRE(induced_subgraph(g, all).graph == g);

    const PeelTrace t = peel(g);
    std::uint64_t sum = 0;
    for (int d : t.degrees) sum += static_cast<std::uint64_t>(d);
    REQUIRE(sum == g.edge_count());
    for (int i = 0; i < n; ++i) {
      const std::uint64_t after = i + 1 < n ? t.edges_remaining[static_cast<std::size_t>(i + 1)] : 0;
      REQUIRE(t.edges_remaining[static_cast<std::size_t>(i)] - after == static_cast<std::uint64_t>(t.degrees[static_cast<std::size_t>(i)]));
      // degrees[i] is the minimum degree of G_i
      std::vector<int> keep = t.remaining_after(i, n).to_vector();
      REQUIRE(t.degrees[static_cast<std::size_t>(i)] == oracle::induced_min_degree(m, keep));
    }

    for (const auto& e : g.edges()) {
      std::uint64_t triangles = 0;
      for (int w = 0; w < n; ++w)
        triangles += (m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(w)] && m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(w)]) ? 1 : 0;
      REQUIRE(common_neighborhood(g, e.u, e.v).count() == triangles);
    }

    std::stringstream io;
    write_edge_list(io, g);
    REQUIRE(read_edge_list(io) == g);
  }
}

TEST_CASE("edge list format is exact") {
  const std::vector<std::pair<int, int>> edges{{2, 1}, {0, 3}, {0, 1}};
  std::ostringstream out;
  write_edge_list(out, make_graph(4, edges));
  CHECK(out.str() == "4 3\n0 1\n0 3\n1 2\n");

  std::istringstream in("# comment\n\n3 2\n# another\n0 1\n\n2 1\n");
  Graph g = read_edge_list(in);
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));

  std::istringstream short_list("3 2\n0 1\n");
  CHECK(kind_of([&] { read_edge_list(short_list); }) == ErrorKind::ParseError);
  std::istringstream garbage("3 x\n");
  CHECK(kind_of([&] { read_edge_list(garbage); }) == ErrorKind::ParseError);
  std::istringstream bad_vertex("3 1\n0 5\n");
  CHECK(kind_of([&] { read_edge_list(bad_vertex); }) == ErrorKind::InvalidVertex);
}
