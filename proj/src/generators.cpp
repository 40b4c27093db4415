#include "joints/generators.hpp"

#include "joints/error.hpp"
#include "joints/rng.hpp"
#include "joints/turan.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace joints {

std::vector<std::uint64_t> sample_distinct(std::uint64_t population, std::uint64_t m, std::uint64_t seed) {
  if (m > population)
    throw Error(ErrorKind::InvalidParam,
                "cannot draw " + std::to_string(m) + " distinct items from " + std::to_string(population));
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> out;
  out.reserve(m);
  for (std::uint64_t j = population - m; j < population; ++j) {
    std::uint64_t t = rng.below(j + 1);
    std::uint64_t pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t pair_index(int n, int u, int v) {
  const auto uu = static_cast<std::uint64_t>(u);
  const auto nn = static_cast<std::uint64_t>(n);
  // pairs preceding row u: sum_{i<u} (n - 1 - i)
  return uu * (2 * nn - uu - 1) / 2 + static_cast<std::uint64_t>(v - u - 1);
}

Edge pair_at(int n, std::uint64_t index) {
  int u = 0;
  auto row = static_cast<std::uint64_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++u;
  }
  return {u, u + 1 + static_cast<int>(index)};
}

Graph gnm(int n, std::uint64_t m, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidParam, "negative order");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
  if (m > pairs)
    throw Error(ErrorKind::InvalidParam, "m = " + std::to_string(m) + " exceeds C(n,2) = " + std::to_string(pairs));
  GraphBuilder b(n);
  // Row-wise walk keeps the index-to-pair conversion linear overall.
  int u = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t idx : sample_distinct(pairs, m, seed)) {
    while (idx >= row_start + static_cast<std::uint64_t>(n - 1 - u)) {
      row_start += static_cast<std::uint64_t>(n - 1 - u);
      ++u;
    }
    b.add_edge(u, u + 1 + static_cast<int>(idx - row_start));
  }
  return b.build();
}

namespace {

std::vector<Edge> pairs_where(int n, int r, bool same_class) {
  auto cls = turan_classes(n, r);
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)]) == same_class) out.push_back({u, v});
  return out;
}

}  // namespace

Graph turan_plus_edges(int n, int r, std::uint64_t extra, std::uint64_t seed) {
  return turan_perturbed(n, r, 0, extra, seed);
}

Graph turan_perturbed(int n, int r, std::uint64_t removed, std::uint64_t added, std::uint64_t seed) {
  if (n < 0 || r < 1) throw Error(ErrorKind::InvalidParam, "need n >= 0 and r >= 1");
  GraphBuilder b(turan_graph(n, r));
  if (removed > 0) {
    auto cross = pairs_where(n, r, false);
    for (auto i : sample_distinct(cross.size(), removed, seed)) b.remove_edge(cross[i].u, cross[i].v);
  }
  if (added > 0) {
    auto inside = pairs_where(n, r, true);
    for (auto i : sample_distinct(inside.size(), added, seed + 1)) b.add_edge(inside[i].u, inside[i].v);
  }
  return b.build();
}

}  // namespace joints
