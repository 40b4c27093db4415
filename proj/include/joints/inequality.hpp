#pragma once

#include "joints/numeric.hpp"
#include "joints/vertex_set.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace joints {

/// Subsets A_1..A_r of the ground set X = {0..n-1}.
struct SetSystem {
  int n = 0;
  std::vector<VertexSet> sets;

  SetSystem() = default;
  SetSystem(int ground, std::vector<VertexSet> members);
  /// Builds from bitmasks; only valid for n <= 64.
  static SetSystem from_masks(int ground, const std::vector<std::uint64_t>& masks);

  int r() const { return static_cast<int>(sets.size()); }
};

/// S_1..S_r (index 0 holds S_1), via S_k = sum over x of C(d(x), k).
std::vector<BigInt> intersection_sums(const SetSystem& sys);

/// C(floor(S1/n), k-1) * (S1 - ((k-1)/k)(floor(S1/n) + 1) n).
Rational typms_lower_bound(const BigInt& s1, int n, int k);

struct TypmsVerdict {
  int k = 0;
  BigInt sk;
  Rational bound;
  bool holds = false;
  bool equality = false;
};

std::vector<TypmsVerdict> typms_check(const SetSystem& sys);

struct BonfPair {
  int i = 0;  // 0-based indices, i < j
  int j = 0;
  std::int64_t overlap = 0;
  Rational threshold;
  bool meets_threshold = false;
};

/// Pair of the r+1 sets with the largest intersection, with the pair lemma's
/// threshold ((r-2)/r + 2/(r^2(r+1)) - (2(r-1)/r) a) n. Ties go to the
/// lexicographically smallest pair.
BonfPair bonf_pair(const SetSystem& sys, int r, const Rational& a);

enum class Regime { Guaranteed, Empirical };
std::string_view to_string(Regime regime);

using BoundInputs = std::map<std::string, Rational, std::less<>>;

/// Exact evaluation of one named bound, optionally compared with a measurement.
struct BoundReport {
  std::string name;
  BoundInputs inputs;
  Surd value;
  /// Whether the bound claims measured > value (true) or measured >= value.
  bool strict = true;
  std::optional<Rational> measured;
  std::optional<bool> holds;
  Regime regime = Regime::Empirical;
  std::string note;  // caveat attached to the formula itself; empty for most bounds

  /// Sets measured and the exact verdict.
  BoundReport& measure(const Rational& m);
};

/// Names: erdb, lok, loj, cor_k, cor, lekd, ourb, minjs, mindg, g0_order.
/// Free symbols are n, r and, depending on the formula, c or alpha.
BoundReport eval_bound(std::string_view name, const BoundInputs& inputs);

const std::vector<std::string>& bound_names();

}  // namespace joints
