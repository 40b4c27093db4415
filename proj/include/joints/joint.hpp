#pragma once

#include "joints/cliques.hpp"
#include "joints/graph.hpp"
#include "joints/inequality.hpp"
#include "joints/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace joints {

/// A p-clique H plus `size` q-cliques meeting H in exactly r_overlap vertices.
/// Only p = r_overlap = 2 (cliques sharing the base edge) is computed.
struct JointCertificate {
  int p = 2;
  int q = 3;
  int r_overlap = 2;
  Edge base_edge;
  BigInt size;
  std::vector<std::vector<int>> cliques;
};

/// Checks every listed clique, the base edge and the size against an
/// independent recount. Returns an empty string when valid.
std::string certificate_problem(const Graph& g, const JointCertificate& cert, std::size_t limit);
inline bool certificate_valid(const Graph& g, const JointCertificate& cert, std::size_t limit) {
  return certificate_problem(g, cert, limit).empty();
}

struct JointsizeResult {
  BigInt size;
  std::optional<Edge> witness;
};

/// max over edges uv of the number of q-cliques containing uv; the witness is
/// the lexicographically smallest maximizing edge.
JointsizeResult jointsize(const Graph& g, int q, unsigned threads = 0);

/// Certificate for the given base edge with at most `limit` listed cliques.
JointCertificate extract_joint(const Graph& g, int q, Edge edge, std::size_t limit);

enum class ReductionCase { MinDegree, Density };
std::string_view to_string(ReductionCase c);

/// Induced subgraph produced by min-degree peeling.
struct ReductionOutcome {
  InducedSubgraph subgraph;
  int n = 0;
  int n_prime = 0;
  ReductionCase kind = ReductionCase::MinDegree;
  Rational beta;
  /// k: one past the last peel index whose min degree is at most
  /// ((r-1)/r - beta)(n - index); 0 when no index qualifies.
  int k = 0;
  /// Number of peeled vertices removed to form the subgraph (l or k).
  int removed = 0;
  PeelTrace trace;

  bool order_ok = false;        // n' > (1 - 1/r^2) n
  bool contains_clique = false;  // K_{r+1} in G'
  bool min_degree_ok = false;    // delta(G') > ((r-1)/r - beta) n'
  bool density_ok = false;       // e(G') > ((r-1)/2r + 1/(r^4(r^2-1))) n'^2
  bool guaranteed = false;       // n > r^8

  bool min_degree_property() const { return contains_clique && min_degree_ok; }
  bool density_property() const { return density_ok; }
  /// The property named by `kind`, together with the order bound.
  bool tagged_property_holds() const {
    return order_ok && (kind == ReductionCase::MinDegree ? min_degree_property() : density_property());
  }
};

/// Requires r >= 2 and e(G) > t_r(n); throws HypothesisViolated otherwise.
ReductionOutcome thexj_reduce(const Graph& g, int r);

struct PairSelection {
  int u = 0;
  int v = 0;
  VertexSet common;
};

/// Pair of the (r+1)-clique maximizing |Gamma(u) & Gamma(v)|, lexicographic ties.
PairSelection lekd_edge(const Graph& g, int r, std::span<const int> clique);

struct LargeJoint {
  JointCertificate certificate;
  /// ourb, measured against the certificate size.
  BoundReport bound;
  /// reduction-min-degree, reduction-density, turan-degree, fallback-jointsize
  std::string route;
  /// Vertex deleted first when e(G) = t_r(n) and some degree is below delta(T_r(n)).
  std::optional<int> deleted_vertex;
  std::optional<ReductionOutcome> reduction;
};

/// Constructive large joint for graphs with e(G) >= t_r(n) other than T_r(n).
/// Throws HypothesisViolated or IsTuranGraph.
LargeJoint find_large_joint(const Graph& g, int r, std::size_t limit = 16, unsigned threads = 0);

/// js(T_r(n) + edge in the largest class, r+1) / (n^{r-1}/r^{r+5}).
/// Throws IndivisibleOrder unless r divides n.
Rational tightness_ratio(int n, int r, unsigned threads = 0);

}  // namespace joints
