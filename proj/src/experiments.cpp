#include "joints/experiments.hpp"

#include "joints/cliques.hpp"
#include "joints/error.hpp"
#include "joints/generators.hpp"
#include "joints/inequality.hpp"
#include "joints/joint.hpp"
#include "joints/parallel.hpp"
#include "joints/report.hpp"
#include "joints/stability.hpp"
#include "joints/turan.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <sstream>

namespace joints {

namespace {

using Row = std::vector<std::string>;

std::string yes(bool b) { return b ? "true" : "false"; }

struct InstanceOutput {
  std::vector<Row> rows;
  std::vector<std::string> failures;
};

// Runs count independent instances on the worker pool and concatenates their
// output in index order, so reports do not depend on scheduling.
void run_instances(ExperimentResult& result, std::size_t count, unsigned threads,
                   const std::function<InstanceOutput(std::size_t)>& instance) {
  std::vector<InstanceOutput> outputs(count);
  parallel_blocks(count, threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) outputs[i] = instance(i);
  });
  for (auto& o : outputs) {
    for (auto& row : o.rows) result.rows.push_back(std::move(row));
    for (auto& f : o.failures) result.failures.push_back(std::move(f));
  }
}

std::vector<int> or_default(const std::vector<int>& v, std::vector<int> fallback) { return v.empty() ? fallback : v; }

std::string regime(int n, int r) {
  return BigInt(n) > ipow(BigInt(r), 8) ? "Guaranteed" : "Empirical";
}

struct SeededInstance {
  int n;
  int r;
  std::uint64_t seed;
};

std::vector<SeededInstance> seeded(const ExperimentConfig& c, int default_n, int default_r, int default_seeds) {
  std::vector<SeededInstance> out;
  const int seeds = c.seeds > 0 ? c.seeds : default_seeds;
  for (int r : or_default(c.r_values, {default_r}))
    for (int n : or_default(c.n_values, {default_n}))
      for (int i = 0; i < seeds; ++i) out.push_back({n, r, c.base_seed + static_cast<std::uint64_t>(i)});
  return out;
}

ExperimentResult verify_turj(const ExperimentConfig& c) {
  ExperimentResult res;
  res.columns = {"seed", "n", "r", "m", "jointsize", "witness_u", "witness_v", "certificate_size", "route",
                 "bound_num", "bound_den", "holds_jointsize", "holds_certificate", "certificate_valid", "regime"};
  auto instances = seeded(c, 300, 2, 100);
  run_instances(res, instances.size(), c.threads, [&](std::size_t i) {
    const auto [n, r, seed] = instances[i];
    InstanceOutput out;
    const auto m = static_cast<std::uint64_t>(turan_number(n, r) + 1);
    const Graph g = gnm(n, m, seed);
    const JointsizeResult js = jointsize(g, r + 1, 1);
    const LargeJoint lj = find_large_joint(g, r, 16, 1);
    BoundReport exact = eval_bound("ourb", {{"n", Rational(n)}, {"r", Rational(r)}});
    exact.measure(Rational(js.size));
    const bool valid = certificate_valid(g, lj.certificate, 16);
    const std::string reg = regime(n, r);
    out.rows.push_back({std::to_string(seed), std::to_string(n), std::to_string(r), std::to_string(m), js.size.str(),
                        js.witness ? std::to_string(js.witness->u) : "", js.witness ? std::to_string(js.witness->v) : "",
                        lj.certificate.size.str(), lj.route, numerator(exact.value.rational).str(),
                        denominator(exact.value.rational).str(), yes(*exact.holds), yes(*lj.bound.holds), yes(valid), reg});
    const std::string id = "verify-turj seed=" + std::to_string(seed) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
    if (!valid) out.failures.push_back(id + ": certificate invalid");
    if (lj.certificate.size > js.size) out.failures.push_back(id + ": certificate exceeds exact jointsize");
    if (reg == "Guaranteed" && !*exact.holds) out.failures.push_back(id + ": exact jointsize below bound");
    if (reg == "Guaranteed" && !*lj.bound.holds) out.failures.push_back(id + ": certificate below bound");
    return out;
  });
  return res;
}

ExperimentResult verify_stability(const ExperimentConfig& c) {
  ExperimentResult res;
  res.columns = {"seed", "n", "r", "kind", "edges", "m_eps", "branch", "g0_order", "g0_min_degree", "jointsize",
                 "coloring_valid", "certificate_valid", "validated", "regime"};
  auto instances = seeded(c, 300, 2, 100);
  run_instances(res, instances.size(), c.threads, [&](std::size_t i) {
    const auto [n, r, seed] = instances[i];
    InstanceOutput out;
    const Rational n2 = Rational(n) * n;
    // Deletions keep e(G) > ((r-1)/2r - alpha) n^2 and stay within alpha n^2 / 2.
    const BigInt floor_needed = floor_div((Rational(r - 1, 2 * r) - c.alpha) * n2);
    const BigInt slack = BigInt(turan_number(n, r)) - floor_needed - 1;
    const BigInt half = floor_div(c.alpha * n2 / 2);
    const BigInt cap_big = slack < half ? slack : half;
    const auto cap = static_cast<std::uint64_t>(cap_big < 0 ? BigInt(0) : cap_big);
    const bool planted = i % 2 == 1;
    const std::uint64_t step = static_cast<std::uint64_t>(i / 2);
    Graph g = planted ? turan_plus_edges(n, r, 1 + step % 3, seed)
                      : turan_perturbed(n, r, cap == 0 ? 0 : 1 + step % cap, 0, seed);
    const std::string id = "verify-stability seed=" + std::to_string(seed) + " n=" + std::to_string(n);
    StabilityReport report;
    try {
      report = check_stability(g, r, c.alpha, {.threads = 1});
    } catch (const Error& e) {
      out.failures.push_back(id + ": " + e.what());
      return out;
    }
    bool coloring_valid = false;
    if (report.coloring) {
      std::vector<int> restricted;
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if ((*report.coloring)[static_cast<std::size_t>(v)] >= 0) keep.push_back(v);
      const auto g0 = induced_subgraph(g, keep);
      for (int v : keep) restricted.push_back((*report.coloring)[static_cast<std::size_t>(v)]);
      coloring_valid = is_proper_coloring(g0.graph, restricted, r) &&
                       keep.size() + report.m_eps.size() == static_cast<std::size_t>(n);
    }
    const bool cert_valid = report.certificate && certificate_valid(g, *report.certificate, 16);
    const bool validated = (report.branch == StabilityBranch::Chromatic && coloring_valid) ||
                           (report.branch == StabilityBranch::Joint && cert_valid);
    out.rows.push_back({std::to_string(seed), std::to_string(n), std::to_string(r), planted ? "planted" : "deleted",
                        std::to_string(g.edge_count()), std::to_string(report.m_eps.size()),
                        std::string(to_string(report.branch)), std::to_string(report.g0_order),
                        std::to_string(report.g0_min_degree), report.jointsize ? report.jointsize->str() : "",
                        yes(coloring_valid), yes(cert_valid), yes(validated), report.guaranteed ? "Guaranteed" : "Empirical"});
    if (report.guaranteed && !validated) out.failures.push_back(id + ": no validated branch");
    if (report.coloring && !coloring_valid) out.failures.push_back(id + ": coloring failed verification");
    if (report.certificate && !cert_valid) out.failures.push_back(id + ": certificate failed verification");
    return out;
  });
  return res;
}

ExperimentResult verify_typms(const ExperimentConfig& c) {
  ExperimentResult res;
  res.columns = {"n", "r", "systems", "checks", "violations", "constant_degree_checks", "equality_misses"};
  const int max_n = c.n_values.empty() ? 5 : c.n_values.back();
  const int max_r = c.r_values.empty() ? 4 : c.r_values.back();
  if (max_n * max_r > 40) throw Error(ErrorKind::InvalidParam, "exhaustive sweep limited to n*r <= 40");
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 1; r <= max_r; ++r) cells.emplace_back(n, r);
  run_instances(res, cells.size(), c.threads, [&](std::size_t idx) {
    const auto [n, r] = cells[idx];
    InstanceOutput out;
    const std::uint64_t systems = std::uint64_t{1} << (n * r);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::uint64_t checks = 0, violations = 0, constant = 0, misses = 0;
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(r));
    for (std::uint64_t code = 0; code < systems; ++code) {
      for (int i = 0; i < r; ++i) masks[static_cast<std::size_t>(i)] = (code >> (i * n)) & mask;
      const SetSystem sys = SetSystem::from_masks(n, masks);
      std::vector<int> degree(static_cast<std::size_t>(n), 0);
      for (auto m : masks)
        for (int x = 0; x < n; ++x) degree[static_cast<std::size_t>(x)] += static_cast<int>((m >> x) & 1u);
      const bool constant_degree = std::all_of(degree.begin(), degree.end(), [&](int d) { return d == degree[0]; });
      for (const auto& v : typms_check(sys)) {
        ++checks;
        if (!v.holds) {
          ++violations;
          if (out.failures.size() < 10)
            out.failures.push_back("typms n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                   " code=" + std::to_string(code) + " k=" + std::to_string(v.k));
        }
        if (constant_degree) {
          ++constant;
          if (!v.equality) ++misses;
        }
      }
    }
    if (misses > 0)
      out.failures.push_back("typms n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             ": equality missed on constant-degree systems");
    out.rows.push_back({std::to_string(n), std::to_string(r), std::to_string(systems), std::to_string(checks),
                        std::to_string(violations), std::to_string(constant), std::to_string(misses)});
    return out;
  });
  return res;
}

ExperimentResult verify_moonmoser(const ExperimentConfig& c) {
  ExperimentResult res;
  res.columns = {"n", "graphs", "pairs_checked", "violations"};
  for (int n : or_default(c.n_values, {6})) {
    if (n < 1 || n > 7) throw Error(ErrorKind::InvalidParam, "exhaustive Moon-Moser sweep limited to 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t graphs = std::uint64_t{1} << pairs;
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    const unsigned workers = resolve_threads(c.threads);
    std::vector<std::uint64_t> checked(workers, 0), violated(workers, 0);
    std::vector<std::vector<std::string>> fails(workers);
    parallel_blocks(graphs, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
      for (std::size_t code = begin; code < end; ++code) {
        std::vector<Edge> edges;
        for (int b = 0; b < pairs; ++b)
          if ((code >> b) & 1u) edges.push_back(slots[static_cast<std::size_t>(b)]);
        for (const auto& row : moon_moser_report(make_graph(n, edges))) {
          ++checked[w];
          if (!row.holds) {
            ++violated[w];
            if (fails[w].size() < 10)
              fails[w].push_back("moon-moser n=" + std::to_string(n) + " graph=" + std::to_string(code) +
                                 " s=" + std::to_string(row.s) + " t=" + std::to_string(row.t));
          }
        }
      }
    });
    std::uint64_t total_checked = 0, total_violated = 0;
    for (unsigned w = 0; w < workers; ++w) {
      total_checked += checked[w];
      total_violated += violated[w];
      for (auto& f : fails[w]) res.failures.push_back(std::move(f));
    }
    res.rows.push_back({std::to_string(n), std::to_string(graphs), std::to_string(total_checked),
                        std::to_string(total_violated)});
  }
  return res;
}

ExperimentResult tightness_scan(const ExperimentConfig& c) {
  ExperimentResult res;
  res.columns = {"r", "n", "jointsize", "bound_num", "bound_den", "ratio_num", "ratio_den", "equals_r6"};
  std::vector<std::pair<int, int>> cells;
  const int max_n = c.n_values.empty() ? 120 : c.n_values.back();
  for (int r : or_default(c.r_values, {2, 3, 4})) {
    if (r < 2) throw Error(ErrorKind::InvalidParam, "tightness scan needs r >= 2");
    // A single --n value is the upper end of the scan; a range lists orders explicitly.
    if (c.n_values.size() > 1) {
      for (int n : c.n_values)
        if (n % r == 0 && n >= 2 * r) cells.emplace_back(r, n);
    } else {
      for (int n = 2 * r; n <= max_n; n += r) cells.emplace_back(r, n);
    }
  }
  run_instances(res, cells.size(), c.threads, [&](std::size_t i) {
    const auto [r, n] = cells[i];
    InstanceOutput out;
    const Rational ratio = tightness_ratio(n, r, 1);
    const Rational bound = rpow(Rational(n), static_cast<unsigned>(r - 1)) / rpow(Rational(r), static_cast<unsigned>(r + 5));
    const Rational js = ratio * bound;
    const bool exact = ratio == rpow(Rational(r), 6);
    out.rows.push_back({std::to_string(r), std::to_string(n), numerator(js).str(), numerator(bound).str(),
                        denominator(bound).str(), numerator(ratio).str(), denominator(ratio).str(), yes(exact)});
    if (!exact)
      out.failures.push_back("tightness r=" + std::to_string(r) + " n=" + std::to_string(n) + ": ratio " + to_string(ratio));
    return out;
  });
  return res;
}

ExperimentResult thexj_trace(const ExperimentConfig& c) {
  ExperimentResult res;
  res.columns = {"seed", "n", "r", "m", "k", "case", "removed", "n_prime", "order_ok", "min_degree_property", "density_property",
                 "tagged_holds", "regime"};
  auto instances = seeded(c, 300, 2, 50);
  run_instances(res, instances.size(), c.threads, [&](std::size_t i) {
    const auto [n, r, seed] = instances[i];
    InstanceOutput out;
    const auto m = static_cast<std::uint64_t>(turan_number(n, r) + 1);
    const ReductionOutcome o = thexj_reduce(gnm(n, m, seed), r);
    out.rows.push_back({std::to_string(seed), std::to_string(n), std::to_string(r), std::to_string(m),
                        std::to_string(o.k), std::string(to_string(o.kind)), std::to_string(o.removed),
                        std::to_string(o.n_prime), yes(o.order_ok), yes(o.min_degree_property()),
                        yes(o.density_property()), yes(o.tagged_property_holds()), o.guaranteed ? "Guaranteed" : "Empirical"});
    if (o.guaranteed && !o.tagged_property_holds())
      out.failures.push_back("thexj seed=" + std::to_string(seed) + " n=" + std::to_string(n) + ": tagged property fails");
    return out;
  });
  return res;
}

const std::map<std::string, std::function<ExperimentResult(const ExperimentConfig&)>>& registry() {
  static const std::map<std::string, std::function<ExperimentResult(const ExperimentConfig&)>> table = {
      {"verify-turj", verify_turj},
      {"verify-stability", verify_stability},
      {"verify-typms-exhaustive", verify_typms},
      {"verify-moonmoser-exhaustive", verify_moonmoser},
      {"tightness-scan", tightness_scan},
      {"thexj-trace", thexj_trace},
  };
  return table;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string now_utc() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  auto it = registry().find(config.experiment);
  if (it == registry().end()) throw Error(ErrorKind::InvalidParam, "unknown experiment '" + config.experiment + "'");
  if (config.seeds < 0) throw Error(ErrorKind::InvalidParam, "seed count must be >= 1");
  ExperimentResult result = it->second(config);
  result.experiment = config.experiment;
  return result;
}

std::string render(const ExperimentResult& result, const std::string& format, bool timestamp) {
  std::ostringstream out;
  if (format == "json") {
    Json j;
    j["experiment"] = result.experiment;
    if (timestamp) j["generated"] = now_utc();
    Json rows = Json::array();
    for (const auto& row : result.rows) {
      Json r = Json::object();
      for (std::size_t i = 0; i < row.size() && i < result.columns.size(); ++i) r[result.columns[i]] = row[i];
      rows.push_back(r);
    }
    j["rows"] = rows;
    j["failures"] = result.failures;
    j["ok"] = result.ok();
    out << j.dump(2) << '\n';
    return out.str();
  }
  if (format != "csv") throw Error(ErrorKind::InvalidParam, "format must be csv or json");
  if (timestamp) out << "# generated " << now_utc() << '\n';
  for (std::size_t i = 0; i < result.columns.size(); ++i) out << (i ? "," : "") << result.columns[i];
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace joints
