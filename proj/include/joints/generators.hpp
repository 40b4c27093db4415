#pragma once

#include "joints/graph.hpp"

#include <cstdint>
#include <vector>

namespace joints {

/// m distinct indices from [0, population), sorted, by Floyd's algorithm.
std::vector<std::uint64_t> sample_distinct(std::uint64_t population, std::uint64_t m, std::uint64_t seed);

/// Uniform G(n, m): edge indices (pairs u < v in lexicographic order) drawn with sample_distinct.
Graph gnm(int n, std::uint64_t m, std::uint64_t seed);

/// T_r(n) plus `extra` distinct intra-class edges, uniform over intra-class pairs.
Graph turan_plus_edges(int n, int r, std::uint64_t extra, std::uint64_t seed);

/// T_r(n) with `removed` uniform inter-class edges deleted, then `added`
/// uniform intra-class edges inserted (two independent streams: seed, seed+1).
Graph turan_perturbed(int n, int r, std::uint64_t removed, std::uint64_t added, std::uint64_t seed);

/// Index of pair (u, v), u < v, in the lexicographic enumeration of pairs of [0, n).
std::uint64_t pair_index(int n, int u, int v);
Edge pair_at(int n, std::uint64_t index);

}  // namespace joints
