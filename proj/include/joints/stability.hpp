#pragma once

#include "joints/graph.hpp"
#include "joints/inequality.hpp"
#include "joints/joint.hpp"
#include "joints/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace joints {

/// Vertices with d(u) <= ((r-1)/r - eps) n, where eps^2 = epsilon_sq.
VertexSet low_degree_set(const Graph& g, int r, const Rational& epsilon_sq);

/// K_{r+1}-free and delta(G) > (1 - 3/(3r-1)) v(G).
bool aes_condition(const Graph& g, int r);

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

/// Proper coloring with colors 0..r-1 if one exists. Exact backtracking
/// (saturation order, one component at a time). Throws ResourceLimit when
/// more than `node_budget` search nodes are needed.
std::optional<std::vector<int>> r_colorable(const Graph& g, int r, std::uint64_t node_budget = kDefaultColoringBudget);

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int r);

enum class StabilityBranch { Joint, Chromatic, OutOfRegime };
std::string_view to_string(StabilityBranch b);

struct StabilityOptions {
  unsigned threads = 0;
  std::uint64_t coloring_budget = kDefaultColoringBudget;
  std::size_t certificate_limit = 16;
  /// Measure jointsize even when the chromatic branch already validates.
  bool measure_both = true;
};

struct StabilityReport {
  int n = 0;
  int r = 0;
  Rational alpha;
  /// eps = 2 sqrt(alpha); stored as eps^2.
  Rational epsilon_sq;
  std::vector<int> m_eps;
  StabilityBranch branch = StabilityBranch::OutOfRegime;

  /// Indexed by original vertex; -1 on M_eps. Present when G_0 is r-colorable.
  std::optional<std::vector<int>> coloring;
  bool coloring_budget_exhausted = false;
  int g0_order = 0;
  int g0_min_degree = 0;
  bool aes_fast_path = false;

  std::optional<BigInt> jointsize;
  std::optional<JointCertificate> certificate;

  /// g0_order, mindg and (when measured) minjs.
  std::vector<BoundReport> checks;
  std::vector<std::string> diagnostics;
  bool guaranteed = false;
};

/// Requires 0 < alpha < r^-8/36 and e(G) > ((r-1)/2r - alpha) n^2.
StabilityReport check_stability(const Graph& g, int r, const Rational& alpha, const StabilityOptions& options = {});

}  // namespace joints
