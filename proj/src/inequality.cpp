#include "joints/inequality.hpp"

#include "joints/error.hpp"

#include <functional>

namespace joints {

SetSystem::SetSystem(int ground, std::vector<VertexSet> members) : n(ground), sets(std::move(members)) {
  if (ground < 0) throw Error(ErrorKind::InvalidParam, "negative ground set");
  for (const auto& s : sets)
    if (s.universe() != static_cast<std::size_t>(ground))
      throw Error(ErrorKind::InvalidParam, "set universe does not match ground set size");
}

SetSystem SetSystem::from_masks(int ground, const std::vector<std::uint64_t>& masks) {
  if (ground > 64) throw Error(ErrorKind::InvalidParam, "mask construction limited to 64 elements");
  std::vector<VertexSet> members;
  members.reserve(masks.size());
  for (auto m : masks) {
    VertexSet s(static_cast<std::size_t>(ground));
    if (ground > 0) s.words()[0] = ground == 64 ? m : (m & ((std::uint64_t{1} << ground) - 1));
    members.push_back(std::move(s));
  }
  return SetSystem(ground, std::move(members));
}

std::vector<BigInt> intersection_sums(const SetSystem& sys) {
  std::vector<int> degree(static_cast<std::size_t>(sys.n), 0);
  for (const auto& s : sys.sets) s.for_each([&](int x) { ++degree[static_cast<std::size_t>(x)]; });
  std::vector<BigInt> sums(static_cast<std::size_t>(sys.r()), 0);
  for (int d : degree)
    for (int k = 1; k <= d; ++k) sums[static_cast<std::size_t>(k - 1)] += binomial(d, k);
  return sums;
}

Rational typms_lower_bound(const BigInt& s1, int n, int k) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "ground set must be non-empty");
  if (k < 1) throw Error(ErrorKind::InvalidParam, "k must be >= 1");
  BigInt d = s1 / n;
  Rational tail = Rational(s1) - Rational(BigInt(k - 1), BigInt(k)) * Rational((d + 1) * n);
  return Rational(binomial(static_cast<std::int64_t>(d), k - 1)) * tail;
}

std::vector<TypmsVerdict> typms_check(const SetSystem& sys) {
  auto sums = intersection_sums(sys);
  std::vector<TypmsVerdict> out;
  if (sys.n < 1) return out;
  for (int k = 1; k <= sys.r(); ++k) {
    TypmsVerdict v;
    v.k = k;
    v.sk = sums[static_cast<std::size_t>(k - 1)];
    v.bound = typms_lower_bound(sums[0], sys.n, k);
    v.holds = Rational(v.sk) >= v.bound;
    v.equality = Rational(v.sk) == v.bound;
    out.push_back(std::move(v));
  }
  return out;
}

BonfPair bonf_pair(const SetSystem& sys, int r, const Rational& a) {
  if (r < 2) throw Error(ErrorKind::InvalidParam, "pair lemma needs r >= 2");
  if (sys.r() != r + 1) throw Error(ErrorKind::InvalidParam, "pair lemma needs exactly r+1 sets");
  if (!(a > 0 && a < Rational(1, r * (r + 1))))
    throw Error(ErrorKind::HypothesisViolated, "a = " + to_string(a) + " outside (0, 1/(r(r+1)))");
  std::int64_t total = 0;
  for (const auto& s : sys.sets) total += static_cast<std::int64_t>(s.count());
  const Rational needed = (Rational(r) - Rational(1, r) - (r + 1) * a) * sys.n;
  if (Rational(total) < needed)
    throw Error(ErrorKind::HypothesisViolated,
                "sum of set sizes " + std::to_string(total) + " below " + to_string(needed));

  BonfPair best;
  best.overlap = -1;
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      auto overlap = static_cast<std::int64_t>(bits::and_count(sys.sets[static_cast<std::size_t>(i)].words(),
                                                               sys.sets[static_cast<std::size_t>(j)].words()));
      if (overlap > best.overlap) {
        best.i = i;
        best.j = j;
        best.overlap = overlap;
      }
    }
  best.threshold = (Rational(r - 2, r) + Rational(2, r * r * (r + 1)) - Rational(2 * (r - 1), r) * a) * sys.n;
  best.meets_threshold = Rational(best.overlap) >= best.threshold;
  return best;
}

std::string_view to_string(Regime regime) { return regime == Regime::Guaranteed ? "Guaranteed" : "Empirical"; }

BoundReport& BoundReport::measure(const Rational& m) {
  measured = m;
  int c = compare(m, value);
  holds = strict ? c > 0 : c >= 0;
  return *this;
}

namespace {

struct Formula {
  std::vector<std::string> symbols;
  bool strict;
  std::function<Surd(const BoundInputs&)> evaluate;
  std::function<Regime(const BoundInputs&)> regime;
};

const Rational& get(const BoundInputs& in, const char* key) { return in.find(key)->second; }

unsigned as_exponent(const Rational& x) {
  if (denominator(x) != 1 || x < 0) throw Error(ErrorKind::InvalidParam, "exponent must be a non-negative integer");
  return static_cast<unsigned>(numerator(x));
}

int as_r(const BoundInputs& in) {
  const Rational& r = get(in, "r");
  if (denominator(r) != 1 || r < 1) throw Error(ErrorKind::InvalidParam, "r must be a positive integer");
  return static_cast<int>(numerator(r));
}

Rational n_over_r_pow(const BoundInputs& in, int exponent) {
  return rpow(get(in, "n") / get(in, "r"), static_cast<unsigned>(exponent));
}

Regime above_r8(const BoundInputs& in) {
  Rational r8 = rpow(get(in, "r"), 8);
  return get(in, "n") > r8 ? Regime::Guaranteed : Regime::Empirical;
}

Regime stability_regime(const BoundInputs& in) {
  const Rational r8 = rpow(get(in, "r"), 8);
  const Rational& alpha = get(in, "alpha");
  const bool alpha_in_range = alpha > 0 && alpha * 36 * r8 < 1;
  return alpha_in_range && get(in, "n") > r8 ? Regime::Guaranteed : Regime::Empirical;
}

Regime always(const BoundInputs&) { return Regime::Guaranteed; }
Regime never(const BoundInputs&) { return Regime::Empirical; }

Surd rational(Rational x) { return Surd{std::move(x), 0, 0}; }

const std::map<std::string, Formula, std::less<>>& formulas() {
  static const std::map<std::string, Formula, std::less<>> table = {
      // n^{r-1} / (10r)^{6r}; n_0(r) is unspecified, so never a guarantee here.
      {"erdb",
       {{"n", "r"}, false,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(rpow(get(in, "n"), as_exponent(Rational(r - 1))) / rpow(Rational(10 * r), as_exponent(Rational(6 * r))));
        },
        never}},
      {"lok",
       {{"n", "r", "c"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(2 * get(in, "c") * Rational(r, r + 1) * n_over_r_pow(in, r + 1));
        },
        always}},
      {"loj",
       {{"n", "r", "c"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(2 * get(in, "c") * n_over_r_pow(in, r - 1));
        },
        always}},
      {"cor_k",
       {{"n", "r", "c"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(get(in, "c") * Rational(r, r + 1) * n_over_r_pow(in, r + 1));
        },
        always}},
      // Stated with exponent r-2, although the per-edge averaging bound it follows from gives r-1.
      {"cor",
       {{"n", "r", "c"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(get(in, "c") * n_over_r_pow(in, r - 2));
        },
        always}},
      {"lekd",
       {{"n", "r"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(rpow(get(in, "n"), static_cast<unsigned>(r - 1)) / rpow(Rational(r), static_cast<unsigned>(r + 3)));
        },
        always}},
      {"ourb",
       {{"n", "r"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational(rpow(get(in, "n"), static_cast<unsigned>(r - 1)) / rpow(Rational(r), static_cast<unsigned>(r + 5)));
        },
        above_r8}},
      {"minjs",
       {{"n", "r"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          return rational((1 - Rational(1, r * r * r)) * rpow(get(in, "n"), static_cast<unsigned>(r - 1)) /
                          rpow(Rational(r), static_cast<unsigned>(r + 5)));
        },
        above_r8}},
      // (1 - 1/r - 6 sqrt(alpha)) n
      {"mindg",
       {{"n", "r", "alpha"}, true,
        [](const BoundInputs& in) {
          int r = as_r(in);
          const Rational& n = get(in, "n");
          return Surd{(1 - Rational(1, r)) * n, -6 * n, get(in, "alpha")};
        },
        stability_regime}},
      // (1 - 2 sqrt(alpha)) n, order of the r-chromatic subgraph (non-strict)
      {"g0_order",
       {{"n", "r", "alpha"}, false,
        [](const BoundInputs& in) {
          const Rational& n = get(in, "n");
          return Surd{n, -2 * n, get(in, "alpha")};
        },
        stability_regime}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : formulas()) out.push_back(name);
    return out;
  }();
  return names;
}

BoundReport eval_bound(std::string_view name, const BoundInputs& inputs) {
  auto it = formulas().find(name);
  if (it == formulas().end()) throw Error(ErrorKind::UnknownBound, "no bound named '" + std::string(name) + "'");
  const Formula& f = it->second;
  BoundReport report;
  report.name = std::string(name);
  for (const auto& symbol : f.symbols) {
    auto found = inputs.find(symbol);
    if (found == inputs.end())
      throw Error(ErrorKind::MissingInput, "bound '" + report.name + "' needs input '" + symbol + "'");
    report.inputs.emplace(symbol, found->second);
  }
  report.value = f.evaluate(report.inputs);
  report.strict = f.strict;
  report.regime = f.regime(report.inputs);
  if (report.name == "cor")
    report.note = "stated exponent r-2; the averaging bound it follows from gives (c/2)(n/r)^(r-1)";
  return report;
}

}  // namespace joints
