#pragma once

#include "joints/graph.hpp"
#include "joints/numeric.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace joints {

/// k_1(G), ..., k_omega(G).
struct CliqueSpectrum {
  std::vector<BigInt> counts;  // counts[s - 1] = k_s
  int omega = 0;

  /// k_s, zero beyond omega; k_0 = 1.
  BigInt k(int s) const;
};

/// Number of s-subsets inducing K_s. s > n gives 0, s = 0 gives 1.
BigInt count_cliques(const Graph& g, int s);

/// Number of s-cliques whose vertices all lie in `candidates`.
BigInt count_cliques_within(const Graph& g, const VertexSet& candidates, int s);

CliqueSpectrum clique_spectrum(const Graph& g);

/// Lexicographically smallest s-clique (vertices increasing), if any.
std::optional<std::vector<int>> find_clique(const Graph& g, int s);
std::optional<std::vector<int>> find_clique_within(const Graph& g, const VertexSet& candidates, int s);

/// Visits s-cliques inside `candidates` in lexicographic order until the
/// visitor returns false.
void for_each_clique_within(const Graph& g, const VertexSet& candidates, int s,
                            const std::function<bool(std::span<const int>)>& visit);

bool is_clique(const Graph& g, std::span<const int> vertices);

/// Number of q-cliques containing the edge uv: k_{q-2}(G[Gamma(u) & Gamma(v)]).
BigInt edge_clique_count(const Graph& g, int u, int v, int q);

struct MoonMoserRow {
  int s = 0;
  int t = 0;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// (s+1)k_{s+1}/(s k_s) - n/s >= (t+1)k_{t+1}/(t k_t) - n/t for omega > s > t >= 1.
std::vector<MoonMoserRow> moon_moser_report(const Graph& g);
std::vector<MoonMoserRow> moon_moser_report(const CliqueSpectrum& spectrum, int n);

}  // namespace joints
