#include "joints/stability.hpp"

#include "joints/error.hpp"

#include <algorithm>

namespace joints {

VertexSet low_degree_set(const Graph& g, int r, const Rational& epsilon_sq) {
  if (r < 1) throw Error(ErrorKind::InvalidParam, "r must be >= 1");
  if (epsilon_sq <= 0) throw Error(ErrorKind::InvalidParam, "epsilon must be positive");
  const int n = g.n();
  const Surd threshold{Rational(r - 1, r) * n, Rational(-n), epsilon_sq};
  VertexSet out(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    if (compare(Rational(g.degree(u)), threshold) <= 0) out.insert(u);
  return out;
}

bool aes_condition(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidParam, "r must be >= 1");
  if (g.n() == 0) return false;
  if (Rational(g.min_degree()) <= (1 - Rational(3, 3 * r - 1)) * g.n()) return false;
  return !find_clique(g, r + 1).has_value();
}

namespace {

class Colorer {
 public:
  Colorer(const Graph& g, int r, std::uint64_t budget)
      : g_(g), r_(r), budget_(budget), color_(static_cast<std::size_t>(g.n()), -1),
        forbid_(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(r), 0),
        saturation_(static_cast<std::size_t>(g.n()), 0) {}

  bool color_component(const std::vector<int>& members) {
    members_ = &members;
    return solve(members.size(), -1);
  }

  std::vector<int> take() { return std::move(color_); }

 private:
  int& forbid(int v, int c) { return forbid_[static_cast<std::size_t>(v) * static_cast<std::size_t>(r_) + static_cast<std::size_t>(c)]; }

  int pick() const {
    int best = -1;
    for (int v : *members_) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      auto sv = saturation_[static_cast<std::size_t>(v)], sb = saturation_[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && g_.degree(v) > g_.degree(best))) best = v;
    }
    return best;
  }

  void assign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    g_.neighbors(v).for_each([&](int w) {
      if (forbid(w, c)++ == 0) ++saturation_[static_cast<std::size_t>(w)];
    });
  }

  void unassign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = -1;
    g_.neighbors(v).for_each([&](int w) {
      if (--forbid(w, c) == 0) --saturation_[static_cast<std::size_t>(w)];
    });
  }

  bool solve(std::size_t remaining, int max_used) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_)
      throw Error(ErrorKind::ResourceLimit, "coloring search exceeded " + std::to_string(budget_) + " nodes");
    const int v = pick();
    const int top = std::min(r_ - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      if (forbid(v, c) != 0) continue;
      assign(v, c);
      if (solve(remaining - 1, std::max(max_used, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  int r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> saturation_;
  const std::vector<int>* members_ = nullptr;
};

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexSet unseen = VertexSet::full(static_cast<std::size_t>(g.n()));
  for (int start = unseen.first(); start >= 0; start = unseen.first()) {
    std::vector<int> comp{start};
    unseen.erase(start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      VertexSet fresh = g.neighbors(comp[i]) & unseen;
      fresh.for_each([&](int w) { comp.push_back(w); });
      unseen -= fresh;
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> r_colorable(const Graph& g, int r, std::uint64_t node_budget) {
  if (r < 1) throw Error(ErrorKind::InvalidParam, "r must be >= 1");
  if (g.n() == 0) return std::vector<int>{};
  Colorer colorer(g, r, node_budget);
  for (const auto& comp : components(g))
    if (!colorer.color_component(comp)) return std::nullopt;
  return colorer.take();
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int r) {
  if (coloring.size() != static_cast<std::size_t>(g.n())) return false;
  for (int c : coloring)
    if (c < 0 || c >= r) return false;
  for (const auto& e : g.edges())
    if (coloring[static_cast<std::size_t>(e.u)] == coloring[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

std::string_view to_string(StabilityBranch b) {
  switch (b) {
    case StabilityBranch::Joint: return "JointBranch";
    case StabilityBranch::Chromatic: return "ChromaticBranch";
    case StabilityBranch::OutOfRegime: return "OutOfRegime";
  }
  return "OutOfRegime";
}

StabilityReport check_stability(const Graph& g, int r, const Rational& alpha, const StabilityOptions& options) {
  if (r < 2) throw Error(ErrorKind::InvalidParam, "stability check needs r >= 2");
  const int n = g.n();
  const Rational r8 = rpow(Rational(r), 8);
  if (!(alpha > 0 && alpha * 36 * r8 < 1))
    throw Error(ErrorKind::HypothesisViolated, "alpha = " + to_string(alpha) + " outside (0, r^-8/36)");
  const Rational n2 = Rational(n) * n;
  const Rational needed = (Rational(r - 1, 2 * r) - alpha) * n2;
  if (!(Rational(BigInt(g.edge_count())) > needed))
    throw Error(ErrorKind::HypothesisViolated,
                "e(G) = " + std::to_string(g.edge_count()) + " is not above " + to_string(needed));

  StabilityReport report;
  report.n = n;
  report.r = r;
  report.alpha = alpha;
  report.epsilon_sq = 4 * alpha;
  report.guaranteed = Rational(n) > r8;
  if (alpha * n2 < 1) report.diagnostics.emplace_back("alpha n^2 < 1: e(G) >= t_r(n), large-joint route applies");

  const VertexSet low = low_degree_set(g, r, report.epsilon_sq);
  report.m_eps = low.to_vector();
  const InducedSubgraph g0 = induced_subgraph(g, VertexSet::full(static_cast<std::size_t>(n)) - low);
  report.g0_order = g0.graph.n();
  report.g0_min_degree = g0.graph.min_degree();

  const BoundInputs inputs{{"n", Rational(n)}, {"r", Rational(r)}, {"alpha", alpha}};
  BoundReport order_check = eval_bound("g0_order", inputs);
  order_check.measure(Rational(report.g0_order));
  BoundReport degree_check = eval_bound("mindg", inputs);
  degree_check.measure(Rational(report.g0_order > 0 ? report.g0_min_degree : 0));
  report.checks.push_back(order_check);
  report.checks.push_back(degree_check);

  report.aes_fast_path = aes_condition(g0.graph, r);
  std::optional<std::vector<int>> coloring;
  try {
    coloring = r_colorable(g0.graph, r, options.coloring_budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceLimit) throw;
    report.coloring_budget_exhausted = true;
    report.diagnostics.emplace_back("coloring verdict unknown: node budget exhausted");
  }
  if (report.aes_fast_path && !coloring && !report.coloring_budget_exhausted)
    report.diagnostics.emplace_back("AES condition holds but no r-coloring was found");
  if (coloring) {
    std::vector<int> lifted(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < coloring->size(); ++i) lifted[static_cast<std::size_t>(g0.original[i])] = (*coloring)[i];
    report.coloring = std::move(lifted);
  }
  const bool chromatic = report.coloring && *order_check.holds && *degree_check.holds;

  JointsizeResult js;
  if (!chromatic || options.measure_both) {
    js = jointsize(g, r + 1, options.threads);
    report.jointsize = js.size;
    BoundReport joint_check = eval_bound("minjs", inputs);
    joint_check.measure(Rational(js.size));
    report.checks.push_back(joint_check);
  }

  if (chromatic) {
    report.branch = StabilityBranch::Chromatic;
    return report;
  }
  if (*report.checks.back().holds && js.witness) {
    report.branch = StabilityBranch::Joint;
    report.certificate = extract_joint(g, r + 1, *js.witness, options.certificate_limit);
    return report;
  }
  report.branch = StabilityBranch::OutOfRegime;
  report.diagnostics.emplace_back(report.guaranteed ? "neither branch validated inside the guaranteed regime"
                                                    : "neither branch validated; n <= r^8");
  return report;
}

}  // namespace joints
