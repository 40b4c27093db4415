// Command-line front end: generators, single-graph analyses and experiment suites.

#include "joints/cliques.hpp"
#include "joints/edge_list.hpp"
#include "joints/error.hpp"
#include "joints/experiments.hpp"
#include "joints/generators.hpp"
#include "joints/joint.hpp"
#include "joints/report.hpp"
#include "joints/stability.hpp"
#include "joints/turan.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace joints;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

std::vector<int> parse_range(const std::string& text, bool with_step) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(std::stoi(item));
  if (parts.size() == 1 && !with_step) return parts;
  if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorKind::InvalidParam, "bad range '" + text + "'");
  const int step = parts.size() == 3 ? parts[2] : 1;
  if (step <= 0 || parts[1] < parts[0]) throw Error(ErrorKind::InvalidParam, "empty range '" + text + "'");
  std::vector<int> out;
  for (int v = parts[0]; v <= parts[1]; v += step) out.push_back(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joints toolkit: Turán numbers, clique counts, jointsize and stability checks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  std::string kind = "turan", gen_out;
  int gen_n = 0, gen_r = 2;
  std::uint64_t gen_m = 0, gen_extra = 1, gen_delete = 0, gen_seed = 1;
  gen->add_option("--kind", kind, "turan | turan-plus-edges | gnm | turan-perturbed")
      ->check(CLI::IsMember({"turan", "turan-plus-edges", "gnm", "turan-perturbed"}));
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--r", gen_r, "number of Turán classes");
  gen->add_option("--m", gen_m, "edge count (gnm)");
  gen->add_option("--extra", gen_extra, "intra-class edges to add");
  gen->add_option("--delete", gen_delete, "inter-class edges to delete (turan-perturbed)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output path (stdout if omitted)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Clique spectrum, jointsize and Moon-Moser rows of one graph");
  std::string analyze_file, analyze_format = "json", analyze_out;
  int analyze_q = 3;
  unsigned analyze_threads = 0;
  analyze->add_option("file", analyze_file, "edge-list file")->required();
  analyze->add_option("--q", analyze_q, "clique order for jointsize");
  analyze->add_option("--format", analyze_format, "json | csv (csv: Moon-Moser rows)")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--threads", analyze_threads);
  analyze->add_option("--out", analyze_out);

  // joint
  auto* joint = app.add_subcommand("joint", "Constructive large joint on one graph");
  std::string joint_file, joint_out;
  int joint_r = 2;
  std::size_t joint_limit = 16;
  unsigned joint_threads = 0;
  joint->add_option("file", joint_file)->required();
  joint->add_option("--r", joint_r);
  joint->add_option("--limit", joint_limit, "maximum number of listed cliques");
  joint->add_option("--threads", joint_threads);
  joint->add_option("--out", joint_out);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Min-degree peeling reduction with its trace");
  std::string reduce_file, reduce_format = "json", reduce_out;
  int reduce_r = 2;
  reduce->add_option("file", reduce_file)->required();
  reduce->add_option("--r", reduce_r);
  reduce->add_option("--format", reduce_format, "json | csv (csv: peel trace)")->check(CLI::IsMember({"json", "csv"}));
  reduce->add_option("--out", reduce_out);

  // stability
  auto* stability = app.add_subcommand("stability", "Stability dichotomy report for one graph");
  std::string stab_file, stab_alpha = "1/10000", stab_out;
  int stab_r = 2;
  unsigned stab_threads = 0;
  stability->add_option("file", stab_file)->required();
  stability->add_option("--r", stab_r);
  stability->add_option("--alpha", stab_alpha, "exact rational P/Q");
  stability->add_option("--threads", stab_threads);
  stability->add_option("--out", stab_out);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named experiment suite");
  std::string experiment, r_spec, n_spec, n_range, alpha = "1/10000", format = "csv", out_path;
  int seeds = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool no_timestamp = false;
  verify->add_option("experiment", experiment)->required()->check(CLI::IsMember(experiment_names()));
  verify->add_option("--r", r_spec, "R or A:B");
  verify->add_option("--n", n_spec, "order (upper end for sweeps)");
  verify->add_option("--n-range", n_range, "A:B:STEP");
  verify->add_option("--seeds", seeds, "number of seeded instances");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--alpha", alpha, "exact rational P/Q");
  verify->add_option("--threads", threads);
  verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out_path);
  verify->add_flag("--no-timestamp", no_timestamp, "omit the generated-at header");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Graph g;
      if (kind == "turan") g = turan_graph(gen_n, gen_r);
      else if (kind == "turan-plus-edges") g = turan_plus_edges(gen_n, gen_r, gen_extra, gen_seed);
      else if (kind == "gnm") g = gnm(gen_n, gen_m, gen_seed);
      else g = turan_perturbed(gen_n, gen_r, gen_delete, gen_extra, gen_seed);
      std::ostringstream text;
      write_edge_list(text, g);
      emit(text.str(), gen_out);
      return 0;
    }
    if (*analyze) {
      const Graph g = load_edge_list(analyze_file);
      const CliqueSpectrum spectrum = clique_spectrum(g);
      const auto rows = moon_moser_report(spectrum, g.n());
      if (analyze_format == "csv") {
        emit(moon_moser_csv(rows), analyze_out);
        return 0;
      }
      const JointsizeResult js = jointsize(g, analyze_q, analyze_threads);
      std::size_t violations = 0;
      for (const auto& row : rows) violations += row.holds ? 0 : 1;
      Json j;
      j["n"] = g.n();
      j["m"] = g.edge_count();
      j["min_degree"] = g.min_degree();
      j["spectrum"] = to_json(spectrum);
      j["jointsize"] = {{"q", analyze_q},
                        {"size", js.size.str()},
                        {"witness", js.witness ? Json{js.witness->u, js.witness->v} : Json(nullptr)}};
      j["moon_moser_rows"] = rows.size();
      j["moon_moser_violations"] = violations;
      emit(j.dump(2) + "\n", analyze_out);
      return violations == 0 ? 0 : 1;
    }
    if (*joint) {
      const Graph g = load_edge_list(joint_file);
      const LargeJoint lj = find_large_joint(g, joint_r, joint_limit, joint_threads);
      Json j = to_json(lj.certificate, &lj.bound);
      j["route"] = lj.route;
      j["certificate_valid"] = certificate_valid(g, lj.certificate, joint_limit);
      emit(j.dump(2) + "\n", joint_out);
      const bool asserted = lj.bound.regime == Regime::Guaranteed;
      return (!asserted || *lj.bound.holds) && certificate_valid(g, lj.certificate, joint_limit) ? 0 : 1;
    }
    if (*reduce) {
      const Graph g = load_edge_list(reduce_file);
      const ReductionOutcome o = thexj_reduce(g, reduce_r);
      if (reduce_format == "csv")
        emit(peel_trace_csv(o.trace), reduce_out);
      else
        emit(to_json(o).dump(2) + "\n", reduce_out);
      return !o.guaranteed || o.tagged_property_holds() ? 0 : 1;
    }
    if (*stability) {
      const Graph g = load_edge_list(stab_file);
      const StabilityReport report = check_stability(g, stab_r, parse_rational(stab_alpha), {.threads = stab_threads});
      emit(to_json(report).dump(2) + "\n", stab_out);
      return !report.guaranteed || report.branch != StabilityBranch::OutOfRegime ? 0 : 1;
    }
    if (*verify) {
      ExperimentConfig config;
      config.experiment = experiment;
      if (!r_spec.empty()) config.r_values = parse_range(r_spec, false);
      if (!n_range.empty()) config.n_values = parse_range(n_range, true);
      else if (!n_spec.empty()) config.n_values = parse_range(n_spec, false);
      config.seeds = seeds;
      config.base_seed = seed;
      config.alpha = parse_rational(alpha);
      config.threads = threads;
      const ExperimentResult result = run_experiment(config);
      emit(render(result, format, !no_timestamp), out_path);
      for (const auto& f : result.failures) std::cerr << "FAIL " << f << '\n';
      return result.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
