#include "joints/joint.hpp"

#include "joints/error.hpp"
#include "joints/parallel.hpp"
#include "joints/turan.hpp"

#include <algorithm>
#include <set>

namespace joints {

namespace {

// Number of q-cliques through the edge uv, uv assumed present.
BigInt through_edge(const Graph& g, int u, int v, int q) {
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  if (q == 3) return bits::and_count(nu.words(), nv.words());
  VertexSet common = nu & nv;
  if (q == 4) return edges_within(g, common);
  return count_cliques_within(g, common, q - 2);
}

void require_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n() || e.u == e.v || !g.has_edge(e.u, e.v))
    throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
}

}  // namespace

std::string_view to_string(ReductionCase c) { return c == ReductionCase::MinDegree ? "MinDegreeCase" : "DensityCase"; }

std::string certificate_problem(const Graph& g, const JointCertificate& cert, std::size_t limit) {
  if (cert.p != 2 || cert.r_overlap != 2) return "only (2,q,2)-joints are checkable";
  const auto [u, v] = cert.base_edge;
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v)) return "base edge is not an edge";
  if (cert.size != edge_clique_count(g, u, v, cert.q)) return "size disagrees with a recount";
  std::set<std::vector<int>> seen;
  for (const auto& c : cert.cliques) {
    if (static_cast<int>(c.size()) != cert.q) return "listed clique has the wrong order";
    if (!is_clique(g, c)) return "listed vertex set is not a clique";
    if (std::find(c.begin(), c.end(), u) == c.end() || std::find(c.begin(), c.end(), v) == c.end())
      return "listed clique misses the base edge";
    std::vector<int> key = c;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return "listed cliques are not distinct";
  }
  BigInt expected = cert.size < limit ? cert.size : BigInt(limit);
  if (BigInt(cert.cliques.size()) != expected) return "number of listed cliques is not min(size, limit)";
  return {};
}

JointsizeResult jointsize(const Graph& g, int q, unsigned threads) {
  if (q < 3) throw Error(ErrorKind::InvalidParam, "jointsize needs q >= 3");
  const auto edges = g.edges();
  const unsigned workers = resolve_threads(threads);
  std::vector<JointsizeResult> partial(workers);
  parallel_blocks(edges.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    JointsizeResult best;
    for (std::size_t i = begin; i < end; ++i) {
      BigInt c = through_edge(g, edges[i].u, edges[i].v, q);
      if (c > best.size) {
        best.size = std::move(c);
        best.witness = edges[i];
      }
    }
    partial[w] = std::move(best);
  });
  // Blocks are in edge order, so strict improvement keeps the smallest maximizing edge.
  JointsizeResult result;
  for (auto& p : partial)
    if (p.size > result.size) result = std::move(p);
  return result;
}

JointCertificate extract_joint(const Graph& g, int q, Edge edge, std::size_t limit) {
  if (q < 3) throw Error(ErrorKind::InvalidParam, "joint needs q >= 3");
  edge = Edge::of(edge.u, edge.v);
  require_edge(g, edge);
  JointCertificate cert;
  cert.q = q;
  cert.base_edge = edge;
  cert.size = through_edge(g, edge.u, edge.v, q);
  if (limit > 0) {
    const VertexSet common = g.neighbors(edge.u) & g.neighbors(edge.v);
    for_each_clique_within(g, common, q - 2, [&](std::span<const int> rest) {
      std::vector<int> clique(rest.begin(), rest.end());
      clique.push_back(edge.u);
      clique.push_back(edge.v);
      std::sort(clique.begin(), clique.end());
      cert.cliques.push_back(std::move(clique));
      return cert.cliques.size() < limit;
    });
  }
  return cert;
}

ReductionOutcome thexj_reduce(const Graph& g, int r) {
  if (r < 2) throw Error(ErrorKind::InvalidParam, "reduction needs r >= 2");
  const int n = g.n();
  const auto t = turan_number(n, r);
  if (static_cast<std::int64_t>(g.edge_count()) <= t)
    throw Error(ErrorKind::HypothesisViolated,
                "e(G) = " + std::to_string(g.edge_count()) + " is not above t_r(n) = " + std::to_string(t));

  ReductionOutcome out;
  out.n = n;
  const int r2 = r * r;
  out.beta = Rational(1, r2 * (r2 - 1));
  const Rational coef = Rational(r - 1, r) - out.beta;
  out.trace = peel(g);

  // k counts the leading peel steps whose minimum degree stays at or below the
  // threshold; the degree sums over exactly these steps drive the edge bound.
  out.k = 0;
  while (out.k < n && Rational(out.trace.degrees[static_cast<std::size_t>(out.k)]) <= coef * (n - out.k)) ++out.k;

  // Split at n/r^2 so that both branches keep strictly more than (1 - 1/r^2) n
  // vertices: the density branch removes the largest l < n/r^2.
  if (static_cast<std::int64_t>(out.k) * r2 >= n) {
    out.kind = ReductionCase::Density;
    out.removed = (n + r2 - 1) / r2 - 1;
  } else {
    out.kind = ReductionCase::MinDegree;
    out.removed = out.k;
  }
  out.subgraph = induced_subgraph(g, out.trace.remaining_after(out.removed, n));
  out.n_prime = out.subgraph.graph.n();

  const Graph& sub = out.subgraph.graph;
  out.order_ok = static_cast<std::int64_t>(out.n_prime) * r2 > static_cast<std::int64_t>(r2 - 1) * n;
  out.contains_clique = find_clique(sub, r + 1).has_value();
  out.min_degree_ok = out.n_prime > 0 && Rational(sub.min_degree()) > coef * out.n_prime;
  const Rational density = Rational(r - 1, 2 * r) + Rational(1, r2 * r2 * (r2 - 1));
  out.density_ok = Rational(BigInt(sub.edge_count())) > density * BigInt(out.n_prime) * out.n_prime;
  out.guaranteed = BigInt(n) > ipow(BigInt(r), 8);
  return out;
}

PairSelection lekd_edge(const Graph& g, int r, std::span<const int> clique) {
  if (static_cast<int>(clique.size()) != r + 1 || !is_clique(g, clique))
    throw Error(ErrorKind::NotAClique, "vertex set does not induce K_" + std::to_string(r + 1));
  std::vector<int> sorted(clique.begin(), clique.end());
  std::sort(sorted.begin(), sorted.end());
  PairSelection best;
  std::size_t best_size = 0;
  bool have = false;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      std::size_t size = bits::and_count(g.neighbors(sorted[i]).words(), g.neighbors(sorted[j]).words());
      if (!have || size > best_size) {
        have = true;
        best_size = size;
        best.u = sorted[i];
        best.v = sorted[j];
      }
    }
  best.common = g.neighbors(best.u) & g.neighbors(best.v);
  return best;
}

LargeJoint find_large_joint(const Graph& g, int r, std::size_t limit, unsigned threads) {
  if (r < 2) throw Error(ErrorKind::InvalidParam, "large joints need r >= 2");
  const int n = g.n();
  const auto t = turan_number(n, r);
  if (static_cast<std::int64_t>(g.edge_count()) < t)
    throw Error(ErrorKind::HypothesisViolated,
                "e(G) = " + std::to_string(g.edge_count()) + " is below t_r(n) = " + std::to_string(t));
  if (is_turan_graph(g, r)) throw Error(ErrorKind::IsTuranGraph, "graph is T_r(n)");

  LargeJoint result;
  std::optional<Edge> edge;
  std::optional<InducedSubgraph> working;
  bool min_degree_path = false;

  if (static_cast<std::int64_t>(g.edge_count()) > t) {
    result.reduction = thexj_reduce(g, r);
  } else {
    const auto delta_t = turan_min_degree(n, r);
    int low = -1;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) < delta_t && (low < 0 || g.degree(v) < g.degree(low))) low = v;
    if (low >= 0) {
      // e(G - u) > t_r(n - 1), so the reduction applies to G - u.
      result.deleted_vertex = low;
      VertexSet keep = VertexSet::full(static_cast<std::size_t>(n));
      keep.erase(low);
      InducedSubgraph minus = induced_subgraph(g, keep);
      ReductionOutcome outcome = thexj_reduce(minus.graph, r);
      for (auto& v : outcome.subgraph.original) v = minus.original[static_cast<std::size_t>(v)];
      for (auto& v : outcome.trace.order) v = minus.original[static_cast<std::size_t>(v)];
      result.reduction = std::move(outcome);
    } else {
      // delta(G) = delta(T_r(n)) and G is not T_r(n), so G contains K_{r+1}.
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
      working = InducedSubgraph{g, std::move(all)};
      min_degree_path = true;
      result.route = "turan-degree";
    }
  }

  if (result.reduction) {
    working = result.reduction->subgraph;
    min_degree_path = result.reduction->kind == ReductionCase::MinDegree;
    result.route = min_degree_path ? "reduction-min-degree" : "reduction-density";
  }

  if (min_degree_path) {
    if (auto clique = find_clique(working->graph, r + 1)) {
      PairSelection sel = lekd_edge(working->graph, r, *clique);
      edge = working->lift(Edge::of(sel.u, sel.v));
    }
  } else {
    JointsizeResult js = jointsize(working->graph, r + 1, threads);
    if (js.witness) edge = working->lift(*js.witness);
  }

  if (!edge) {
    result.route = "fallback-jointsize";
    JointsizeResult js = jointsize(g, r + 1, threads);
    edge = js.witness ? *js.witness : g.edges().front();
  }

  result.certificate = extract_joint(g, r + 1, *edge, limit);
  result.bound = eval_bound("ourb", {{"n", Rational(n)}, {"r", Rational(r)}});
  result.bound.measure(Rational(result.certificate.size));
  return result;
}

Rational tightness_ratio(int n, int r, unsigned threads) {
  if (r < 2) throw Error(ErrorKind::InvalidParam, "tightness ratio needs r >= 2");
  if (n % r != 0)
    throw Error(ErrorKind::IndivisibleOrder, std::to_string(r) + " does not divide " + std::to_string(n));
  const Graph g = turan_graph_plus_edge(n, r);
  const JointsizeResult js = jointsize(g, r + 1, threads);
  const Rational bound = rpow(Rational(n), static_cast<unsigned>(r - 1)) / rpow(Rational(r), static_cast<unsigned>(r + 5));
  return Rational(js.size) / bound;
}

}  // namespace joints
