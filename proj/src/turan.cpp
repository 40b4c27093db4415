#include "joints/turan.hpp"

#include "joints/error.hpp"
#include "joints/numeric.hpp"

#include <algorithm>
#include <string>

namespace joints {

namespace {

void require_classes(std::int64_t r) {
  if (r < 1) throw Error(ErrorKind::InvalidParam, "Turán graph needs r >= 1, got " + std::to_string(r));
}

}  // namespace

std::vector<int> turan_class_sizes(int n, int r) {
  require_classes(r);
  if (n < 0) throw Error(ErrorKind::InvalidParam, "negative order");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

std::vector<int> turan_classes(int n, int r) {
  std::vector<int> cls;
  cls.reserve(static_cast<std::size_t>(n));
  auto sizes = turan_class_sizes(n, r);
  for (int c = 0; c < r; ++c) cls.insert(cls.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(c)]), c);
  return cls;
}

Graph turan_graph(int n, int r) {
  auto cls = turan_classes(n, r);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)]) b.add_edge(u, v);
  return b.build();
}

std::int64_t turan_number(std::int64_t n, std::int64_t r) {
  require_classes(r);
  if (n < 0) throw Error(ErrorKind::InvalidParam, "negative order");
  const std::int64_t t = n % r;
  Rational value = Rational(BigInt(r - 1), BigInt(2 * r)) * (BigInt(n) * n - BigInt(t) * t) + binomial(t, 2);
  if (denominator(value) != 1) throw Error(ErrorKind::InvalidParam, "non-integral Turán number");
  return static_cast<std::int64_t>(numerator(value));
}

std::int64_t turan_min_degree(std::int64_t n, std::int64_t r) {
  require_classes(r);
  return (r - 1) * n / r;
}

Graph turan_graph_plus_edge(int n, int r) {
  auto sizes = turan_class_sizes(n, r);
  if (sizes.front() < 2)
    throw Error(ErrorKind::InvalidParam, "largest class of T_" + std::to_string(r) + "(" + std::to_string(n) +
                                             ") has fewer than two vertices");
  GraphBuilder b(turan_graph(n, r));
  b.add_edge(0, 1);
  return b.build();
}

bool is_turan_graph(const Graph& g, int r) {
  require_classes(r);
  const int n = g.n();
  if (static_cast<std::int64_t>(g.edge_count()) != turan_number(n, r)) return false;

  // Complement components, each required to be a clique of the complement.
  std::vector<int> sizes;
  VertexSet unvisited = VertexSet::full(static_cast<std::size_t>(n));
  for (int start = unvisited.first(); start >= 0; start = unvisited.first()) {
    VertexSet non_neighbors = unvisited - g.neighbors(start);
    // In a complete multipartite graph the non-neighbors of start are exactly its class.
    int size = static_cast<int>(non_neighbors.count());
    bool independent = true;
    non_neighbors.for_each([&](int v) {
      if (independent && !((g.neighbors(v) & non_neighbors).empty())) independent = false;
    });
    if (!independent) return false;
    // Nothing outside the class may be a non-neighbor of a class member.
    VertexSet outside = VertexSet::full(static_cast<std::size_t>(n)) - non_neighbors;
    bool complete = true;
    non_neighbors.for_each([&](int v) {
      if (complete && (outside - g.neighbors(v)).count() != 0) complete = false;
    });
    if (!complete) return false;
    sizes.push_back(size);
    unvisited -= non_neighbors;
  }
  auto expected = turan_class_sizes(n, r);
  expected.erase(std::remove(expected.begin(), expected.end(), 0), expected.end());
  std::sort(sizes.begin(), sizes.end());
  std::sort(expected.begin(), expected.end());
  return sizes == expected;
}

}  // namespace joints
