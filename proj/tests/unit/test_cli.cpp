#include "doctest.h"

#include "joints/edge_list.hpp"
#include "joints/error.hpp"
#include "joints/experiments.hpp"
#include "joints/generators.hpp"
#include "joints/joint.hpp"
#include "joints/report.hpp"
#include "joints/rng.hpp"
#include "joints/turan.hpp"

#include <set>
#include <sstream>

using namespace joints;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::string edge_list_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

ExperimentConfig config(const std::string& name) {
  ExperimentConfig c;
  c.experiment = name;
  return c;
}

}  // namespace

TEST_CASE("SplitMix64 reproduces the reference stream") {
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFull);
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ull);
  CHECK(rng.next() == 3203168211198807973ull);
  CHECK(rng.next() == 9817491932198370423ull);
}

TEST_CASE("below is unbiased in range") {
  SplitMix64 rng(99);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) {
    auto x = rng.below(7);
    REQUIRE(x < 7);
    ++hits[x];
  }
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
  SplitMix64 one(5);
  CHECK(one.below(1) == 0);
}

TEST_CASE("sample_distinct and pair indexing") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = sample_distinct(100, seed, seed);
    REQUIRE(s.size() == seed);
    REQUIRE(std::set<std::uint64_t>(s.begin(), s.end()).size() == seed);
    REQUIRE(std::is_sorted(s.begin(), s.end()));
    for (auto x : s) REQUIRE(x < 100);
    REQUIRE(sample_distinct(100, seed, seed) == s);
  }
  CHECK(sample_distinct(5, 5, 3) == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
  CHECK(kind_of([] { sample_distinct(5, 6, 3); }) == ErrorKind::InvalidParam);

  for (int n = 2; n < 30; ++n) {
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx) {
        REQUIRE(pair_index(n, u, v) == idx);
        REQUIRE(pair_at(n, idx) == Edge::of(u, v));
      }
  }
}

TEST_CASE("gen examples") {
  CHECK(edge_list_text(turan_graph(5, 3)) == edge_list_text(turan_graph(5, 3)));
  const Graph g = turan_plus_edges(300, 2, 1, 7);
  CHECK(static_cast<std::int64_t>(g.edge_count()) == turan_number(300, 2) + 1);
  const auto cls = turan_classes(300, 2);
  int intra = 0;
  for (const auto& e : g.edges())
    if (cls[static_cast<std::size_t>(e.u)] == cls[static_cast<std::size_t>(e.v)]) ++intra;
  CHECK(intra == 1);
  CHECK(kind_of([] { gnm(10, 46, 1); }) == ErrorKind::InvalidParam);
  CHECK(gnm(10, 45, 1).edge_count() == 45);
  CHECK(gnm(0, 0, 1).n() == 0);
}

TEST_CASE("gnm is the documented construction") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 5 + static_cast<int>(seed);
    const std::uint64_t m = seed * 3 % (static_cast<std::uint64_t>(n) * (n - 1) / 2);
    const Graph g = gnm(n, m, seed);
    REQUIRE(g.edge_count() == m);
    REQUIRE(gnm(n, m, seed) == g);
    std::vector<Edge> expected;
    for (auto idx : sample_distinct(static_cast<std::uint64_t>(n) * (n - 1) / 2, m, seed)) expected.push_back(pair_at(n, idx));
    REQUIRE(g.edges() == expected);
  }
  CHECK_FALSE(gnm(40, 300, 1) == gnm(40, 300, 2));
}

TEST_CASE("turan_perturbed removes cross edges and adds intra edges") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int r = 2 + static_cast<int>(seed % 3);
    const int n = 10 + static_cast<int>(seed);
    const std::uint64_t removed = seed % 5, added = seed % 4;
    const Graph g = turan_perturbed(n, r, removed, added, seed);
    const Graph t = turan_graph(n, r);
    REQUIRE(static_cast<std::uint64_t>(g.edge_count()) == t.edge_count() - removed + added);
    const auto cls = turan_classes(n, r);
    std::uint64_t intra = 0, missing = 0;
    for (const auto& e : g.edges())
      if (cls[static_cast<std::size_t>(e.u)] == cls[static_cast<std::size_t>(e.v)]) ++intra;
    for (const auto& e : t.edges())
      if (!g.has_edge(e.u, e.v)) ++missing;
    REQUIRE(intra == added);
    REQUIRE(missing == removed);
    REQUIRE(turan_perturbed(n, r, removed, added, seed) == g);
  }
  CHECK(turan_plus_edges(40, 2, 3, 9) == turan_perturbed(40, 2, 0, 3, 9));
}

TEST_CASE("certificate JSON shape") {
  const Graph g = turan_graph_plus_edge(9, 3);
  const auto found = find_large_joint(g, 3);
  const Json j = to_json(found.certificate, &found.bound);
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 4);
  CHECK(j["r_overlap"] == 2);
  CHECK(j["size"] == "9");
  CHECK(j["base_edge"] == Json::array({0, 1}));
  CHECK(j["bound"]["name"] == "ourb");
  CHECK(j["bound"]["numerator"] == "1");
  CHECK(j["bound"]["denominator"] == "81");
  CHECK(j["bound"]["holds"] == true);
  CHECK(j["bound"]["regime"] == "Empirical");
}

TEST_CASE("bound CSV row") {
  auto report = eval_bound("ourb", {{"n", Rational(300)}, {"r", Rational(2)}});
  report.measure(Rational(150));
  const std::string header = bound_csv_header();
  const std::string row = to_csv_row(report);
  CHECK(header.find("regime") != std::string::npos);
  CHECK(row.find("ourb") == 0);
  CHECK(row.find(",75,32,") != std::string::npos);
  CHECK(row.find(",150/1,true,Guaranteed") != std::string::npos);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
}

TEST_CASE("experiments are deterministic and pass") {
  auto mm = run_experiment(config("verify-moonmoser-exhaustive"));
  CHECK(mm.ok());
  REQUIRE(mm.rows.size() == 1);
  CHECK(mm.rows[0][1] == "32768");
  CHECK(mm.rows[0][3] == "0");

  auto tight = config("tightness-scan");
  tight.n_values = {24};
  const auto a = run_experiment(tight);
  tight.threads = 3;
  const auto b = run_experiment(tight);
  CHECK(a.ok());
  CHECK(render(a, "csv", false) == render(b, "csv", false));
  CHECK(render(a, "json", false) == render(b, "json", false));
  for (const auto& row : a.rows) CHECK(row.back() == "true");

  auto turj = config("verify-turj");
  turj.seeds = 4;
  turj.n_values = {300};
  const auto t1 = run_experiment(turj);
  turj.threads = 2;
  const auto t2 = run_experiment(turj);
  CHECK(t1.ok());
  CHECK(t1.rows.size() == 4);
  CHECK(render(t1, "csv", false) == render(t2, "csv", false));
  const std::string stamped = render(t1, "csv", true);
  CHECK(stamped.rfind("#", 0) == 0);
  CHECK(stamped.substr(stamped.find('\n') + 1) == render(t1, "csv", false));

  CHECK(kind_of([] { run_experiment(config("nope")); }) == ErrorKind::InvalidParam);
}

TEST_CASE("every experiment runs at reduced scale") {
  for (const auto& name : experiment_names()) {
    auto c = config(name);
    c.seeds = 2;
    if (name == "verify-typms-exhaustive") c.n_values = {3}, c.r_values = {3};
    if (name == "verify-moonmoser-exhaustive") c.n_values = {5};
    if (name == "tightness-scan") c.n_values = {12};
    if (name == "verify-turj" || name == "verify-stability" || name == "thexj-trace") c.n_values = {260};
    const auto res = run_experiment(c);
    CAPTURE(name);
    CHECK(res.ok());
    CHECK_FALSE(res.rows.empty());
    for (const auto& row : res.rows) CHECK(row.size() == res.columns.size());
  }
}
