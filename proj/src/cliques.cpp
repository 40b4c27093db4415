#include "joints/cliques.hpp"

#include "joints/error.hpp"

#include <string>

namespace joints {

namespace {

// Pivot-based clique counting. Every root-to-leaf path of the recursion holds
// a set of `held` vertices plus `pivots` pivot vertices; the cliques it
// represents are held + any subset of the pivots, each counted exactly once.
class PivotCounter {
 public:
  PivotCounter(const Graph& g, int target) : g_(g), target_(target), words_(words_for(static_cast<std::size_t>(g.n()))) {
    small_.assign(static_cast<std::size_t>(g.n()) + 2, 0);
    big_.assign(static_cast<std::size_t>(g.n()) + 2, 0);
  }

  void run(const VertexSet& candidates) {
    std::vector<Word> root(candidates.words().begin(), candidates.words().end());
    recurse(root, 0, 0);
  }

  BigInt total(int size) const {
    if (size < 0 || static_cast<std::size_t>(size) >= small_.size()) return 0;
    return big_[static_cast<std::size_t>(size)] + small_[static_cast<std::size_t>(size)];
  }

 private:
  void add(int size, std::uint64_t amount) {
    auto& slot = small_[static_cast<std::size_t>(size)];
    if (slot > ~std::uint64_t{0} - amount) {
      big_[static_cast<std::size_t>(size)] += slot;
      slot = 0;
    }
    slot += amount;
  }

  void add(int size, const BigInt& amount) {
    if (amount <= BigInt(~std::uint64_t{0}))
      add(size, static_cast<std::uint64_t>(amount));
    else
      big_[static_cast<std::size_t>(size)] += amount;
  }

  void leaf(int held, int pivots) {
    if (target_ >= 0) {
      int j = target_ - held;
      if (j >= 0 && j <= pivots) add(target_, binomial(pivots, j));
      return;
    }
    for (int j = 0; j <= pivots; ++j) add(held + j, binomial(pivots, j));
  }

  void recurse(std::vector<Word>& cand, int held, int pivots) {
    std::size_t size = bits::popcount(cand);
    if (target_ >= 0) {
      if (held > target_) return;
      if (held == target_) {
        add(target_, std::uint64_t{1});
        return;
      }
      if (static_cast<std::size_t>(held + pivots) + size < static_cast<std::size_t>(target_)) return;
    }
    if (size == 0) {
      leaf(held, pivots);
      return;
    }

    int pivot = -1;
    std::size_t best = 0;
    for_each_bit(cand, [&](int v) {
      std::size_t d = bits::and_count(g_.neighbors(v).words(), cand);
      if (pivot < 0 || d > best) {
        pivot = v;
        best = d;
      }
    });

    std::vector<Word> branch(words_);
    const auto pivot_row = g_.neighbors(pivot).words();
    for (std::size_t i = 0; i < words_; ++i) branch[i] = cand[i] & ~pivot_row[i];

    std::vector<Word> next(words_);
    for_each_bit(branch, [&](int v) {
      bits::and_into(next, cand, g_.neighbors(v).words());
      if (v == pivot)
        recurse(next, held, pivots + 1);
      else
        recurse(next, held + 1, pivots);
      cand[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
    });
  }

  template <class F>
  static void for_each_bit(std::span<const Word> words, F&& f) {
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      Word w = words[wi];
      while (w) {
        f(static_cast<int>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  const Graph& g_;
  int target_;
  std::size_t words_;
  std::vector<std::uint64_t> small_;
  std::vector<BigInt> big_;
};

void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.n()))
    throw Error(ErrorKind::InvalidVertex, "vertex set universe does not match graph order");
}

// Depth-first lexicographic clique search; returns false when stopped early.
bool enumerate(const Graph& g, const VertexSet& cand, int remaining, std::vector<int>& current,
               const std::function<bool(std::span<const int>)>& visit) {
  if (remaining == 0) return visit(current);
  if (cand.count() < static_cast<std::size_t>(remaining)) return true;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    VertexSet next = cand & g.neighbors(v);
    // restrict to vertices after v so each clique appears once, in increasing order
    for (int w = next.first(); w >= 0 && w < v; w = next.next(w)) next.erase(w);
    current.push_back(v);
    bool go_on = enumerate(g, next, remaining - 1, current, visit);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

BigInt CliqueSpectrum::k(int s) const {
  if (s == 0) return 1;
  if (s < 0 || s > omega) return 0;
  return counts[static_cast<std::size_t>(s - 1)];
}

BigInt count_cliques_within(const Graph& g, const VertexSet& candidates, int s) {
  check_universe(g, candidates);
  if (s < 0) throw Error(ErrorKind::InvalidParam, "clique order must be non-negative");
  if (s == 0) return 1;
  if (s == 1) return candidates.count();
  if (s == 2) return edges_within(g, candidates);
  if (static_cast<std::size_t>(s) > candidates.count()) return 0;
  if (s == 3) {
    // each triangle is seen once from each of its three vertices
    std::uint64_t thrice = 0;
    candidates.for_each([&](int w) { thrice += edges_within(g, candidates & g.neighbors(w)); });
    return thrice / 3;
  }
  PivotCounter counter(g, s);
  counter.run(candidates);
  return counter.total(s);
}

BigInt count_cliques(const Graph& g, int s) {
  if (s < 1) throw Error(ErrorKind::InvalidParam, "clique order must be >= 1");
  if (s > g.n()) return 0;
  if (s == 1) return g.n();
  if (s == 2) return g.edge_count();
  return count_cliques_within(g, VertexSet::full(static_cast<std::size_t>(g.n())), s);
}

CliqueSpectrum clique_spectrum(const Graph& g) {
  PivotCounter counter(g, -1);
  counter.run(VertexSet::full(static_cast<std::size_t>(g.n())));
  CliqueSpectrum spectrum;
  for (int s = 1; s <= g.n(); ++s) {
    BigInt c = counter.total(s);
    if (c == 0) break;
    spectrum.counts.push_back(std::move(c));
    spectrum.omega = s;
  }
  return spectrum;
}

void for_each_clique_within(const Graph& g, const VertexSet& candidates, int s,
                            const std::function<bool(std::span<const int>)>& visit) {
  check_universe(g, candidates);
  if (s < 0) throw Error(ErrorKind::InvalidParam, "clique order must be non-negative");
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(s));
  enumerate(g, candidates, s, current, visit);
}

std::optional<std::vector<int>> find_clique_within(const Graph& g, const VertexSet& candidates, int s) {
  std::optional<std::vector<int>> found;
  for_each_clique_within(g, candidates, s, [&](std::span<const int> c) {
    found.emplace(c.begin(), c.end());
    return false;
  });
  return found;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int s) {
  if (s < 1) throw Error(ErrorKind::InvalidParam, "clique order must be >= 1");
  return find_clique_within(g, VertexSet::full(static_cast<std::size_t>(g.n())), s);
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.n()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || vertices[j] < 0 || vertices[j] >= g.n() || !g.has_edge(vertices[i], vertices[j]))
        return false;
  }
  return true;
}

BigInt edge_clique_count(const Graph& g, int u, int v, int q) {
  if (q < 2) throw Error(ErrorKind::InvalidParam, "clique order must be >= 2");
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v))
    throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  if (q == 2) return 1;
  const VertexSet common = g.neighbors(u) & g.neighbors(v);
  if (q == 3) return common.count();
  return count_cliques_within(g, common, q - 2);
}

std::vector<MoonMoserRow> moon_moser_report(const CliqueSpectrum& spectrum, int n) {
  std::vector<MoonMoserRow> rows;
  const int q = spectrum.omega;
  auto side = [&](int s) {
    return Rational(BigInt((s + 1) * spectrum.k(s + 1)), BigInt(s * spectrum.k(s))) - Rational(n, s);
  };
  for (int s = 2; s < q; ++s) {
    Rational lhs = side(s);
    for (int t = 1; t < s; ++t) {
      Rational rhs = side(t);
      rows.push_back({s, t, lhs, rhs, lhs >= rhs});
    }
  }
  return rows;
}

std::vector<MoonMoserRow> moon_moser_report(const Graph& g) { return moon_moser_report(clique_spectrum(g), g.n()); }

}  // namespace joints
