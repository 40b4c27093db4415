#pragma once

#include "joints/graph.hpp"

#include <cstdint>
#include <vector>

namespace joints {

/// Class sizes of T_r(n): n mod r classes of size ceil(n/r) first, then floor(n/r).
std::vector<int> turan_class_sizes(int n, int r);

/// Class index of every vertex of turan_graph(n, r); classes are contiguous.
std::vector<int> turan_classes(int n, int r);

Graph turan_graph(int n, int r);

/// t_r(n), evaluated from the closed form ((r-1)/2r)(n^2 - t^2) + C(t,2).
std::int64_t turan_number(std::int64_t n, std::int64_t r);

/// floor((r-1)n/r).
std::int64_t turan_min_degree(std::int64_t n, std::int64_t r);

/// T_r(n) plus the edge {0, 1} inside the first (largest) class.
Graph turan_graph_plus_edge(int n, int r);

/// True iff g is isomorphic to T_r(n): e(g) = t_r(n) and the complement is a
/// disjoint union of cliques whose sizes are the Turán class sizes.
bool is_turan_graph(const Graph& g, int r);

}  // namespace joints
