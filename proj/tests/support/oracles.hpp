#pragma once

// Test-only reference implementations. They share nothing with the library
// code paths they check: plain adjacency matrices, subset enumeration and
// exhaustive search.

#include "joints/graph.hpp"
#include "joints/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const joints::Graph& g) {
  Matrix m(static_cast<std::size_t>(g.n()), std::vector<bool>(static_cast<std::size_t>(g.n()), false));
  for (const auto& e : g.edges()) {
    m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  return m;
}

/// Calls f on every s-subset of [0, n) in lexicographic order.
inline void for_each_subset(int n, int s, const std::function<void(const std::vector<int>&)>& f) {
  if (s > n || s < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline bool subset_is_clique(const Matrix& m, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!m[static_cast<std::size_t>(vs[i])][static_cast<std::size_t>(vs[j])]) return false;
  return true;
}

inline std::uint64_t count_cliques(const joints::Graph& g, int s) {
  const Matrix m = matrix_of(g);
  std::uint64_t c = 0;
  for_each_subset(g.n(), s, [&](const std::vector<int>& vs) { c += subset_is_clique(m, vs) ? 1 : 0; });
  return c;
}

inline std::vector<int> first_clique(const joints::Graph& g, int s) {
  const Matrix m = matrix_of(g);
  std::vector<int> found;
  for_each_subset(g.n(), s, [&](const std::vector<int>& vs) {
    if (found.empty() && subset_is_clique(m, vs)) found = vs;
  });
  return found;
}

/// Number of q-cliques containing u and v, by subset enumeration.
inline std::uint64_t cliques_through(const joints::Graph& g, int u, int v, int q) {
  const Matrix m = matrix_of(g);
  std::uint64_t c = 0;
  for_each_subset(g.n(), q, [&](const std::vector<int>& vs) {
    if (std::find(vs.begin(), vs.end(), u) != vs.end() && std::find(vs.begin(), vs.end(), v) != vs.end() &&
        subset_is_clique(m, vs))
      ++c;
  });
  return c;
}

/// G(n, 1/2)-style random graph with edge probability num/den, built from an
/// independent stream.
inline joints::Graph random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  joints::SplitMix64 rng(seed ^ 0xA5A5A5A5DEADBEEFull);
  joints::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(den) < num) b.add_edge(u, v);
  return b.build();
}

/// Maximum edge count of a K_{r+1}-free graph on n labeled vertices, by
/// exhaustive branch and bound over all edge subsets.
inline int max_kfree_edges(int n, int r) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  int best = 0;
  // Does the vertex set `cand` contain a clique of size `need`?
  std::function<bool(std::uint32_t, int)> has_clique = [&](std::uint32_t cand, int need) -> bool {
    if (need == 0) return true;
    while (cand) {
      if (__builtin_popcount(cand) < need) return false;
      int v = __builtin_ctz(cand);
      cand &= cand - 1;
      if (has_clique(cand & adj[static_cast<std::size_t>(v)], need - 1)) return true;
    }
    return false;
  };
  std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int edges) {
    if (i == slots.size()) {
      best = std::max(best, edges);
      return;
    }
    // every graph in this branch has at most edges + (remaining slots) edges
    if (edges + static_cast<int>(slots.size() - i) <= best) return;
    auto [u, v] = slots[i];
    if (!has_clique(adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)], r - 1)) {
      adj[static_cast<std::size_t>(u)] |= 1u << v;
      adj[static_cast<std::size_t>(v)] |= 1u << u;
      dfs(i + 1, edges + 1);
      adj[static_cast<std::size_t>(u)] &= ~(1u << v);
      adj[static_cast<std::size_t>(v)] &= ~(1u << u);
    }
    dfs(i + 1, edges);
  };
  dfs(0, 0);
  return best;
}

/// Maximum number of cross pairs over all assignments of n vertices to r classes.
inline int max_r_partite_edges(int n, int r) {
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  int best = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int e = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e += cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)];
      best = std::max(best, e);
      return;
    }
    for (int c = 0; c < r; ++c) {
      cls[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

/// S_k = sum over k-subsets of the sets of |intersection|, by direct enumeration.
inline std::vector<std::uint64_t> intersection_sums(const std::vector<std::uint64_t>& masks, int n) {
  const int r = static_cast<int>(masks.size());
  const std::uint64_t ground = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> sums(static_cast<std::size_t>(r), 0);
  for (std::uint32_t family = 1; family < (1u << r); ++family) {
    std::uint64_t inter = ground;
    for (int i = 0; i < r; ++i)
      if ((family >> i) & 1u) inter &= masks[static_cast<std::size_t>(i)];
    sums[static_cast<std::size_t>(__builtin_popcount(family) - 1)] +=
        static_cast<std::uint64_t>(__builtin_popcountll(inter));
  }
  return sums;
}

/// Minimum degree of the graph induced by `keep`, from the adjacency matrix.
inline int induced_min_degree(const Matrix& m, const std::vector<int>& keep) {
  int best = -1;
  for (int u : keep) {
    int d = 0;
    for (int v : keep) d += m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ? 1 : 0;
    if (best < 0 || d < best) best = d;
  }
  return best < 0 ? 0 : best;
}

}  // namespace oracle
