#include "joints/report.hpp"

#include <sstream>

namespace joints {

namespace {

Json rational_json(const Rational& x) { return to_string(x); }

Json surd_json(const Surd& s) {
  if (s.is_rational()) return rational_json(s.rational);
  return Json{{"rational", to_string(s.rational)},
              {"sqrt_coefficient", to_string(s.coefficient)},
              {"sqrt_radicand", to_string(s.radicand)}};
}

}  // namespace

Json to_json(const BoundReport& report) {
  Json j;
  j["name"] = report.name;
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = to_string(v);
  j["inputs"] = inputs;
  if (report.value.is_rational()) {
    j["numerator"] = numerator(report.value.rational).str();
    j["denominator"] = denominator(report.value.rational).str();
  } else {
    j["numerator"] = nullptr;
    j["denominator"] = nullptr;
  }
  j["value"] = surd_json(report.value);
  j["approx"] = report.value.approx();
  j["strict"] = report.strict;
  j["measured"] = report.measured ? Json(to_string(*report.measured)) : Json(nullptr);
  j["holds"] = report.holds ? Json(*report.holds) : Json(nullptr);
  j["regime"] = std::string(to_string(report.regime));
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json to_json(const JointCertificate& cert, const BoundReport* bound) {
  Json j;
  j["p"] = cert.p;
  j["q"] = cert.q;
  j["r_overlap"] = cert.r_overlap;
  j["base_edge"] = {cert.base_edge.u, cert.base_edge.v};
  j["size"] = cert.size.str();
  j["cliques"] = cert.cliques;
  if (bound) {
    Json b;
    b["name"] = bound->name;
    b["numerator"] = numerator(bound->value.rational).str();
    b["denominator"] = denominator(bound->value.rational).str();
    b["holds"] = bound->holds ? Json(*bound->holds) : Json(nullptr);
    b["regime"] = std::string(to_string(bound->regime));
    j["bound"] = b;
  } else {
    j["bound"] = nullptr;
  }
  return j;
}

Json to_json(const StabilityReport& report) {
  Json j;
  j["alpha"] = to_string(report.alpha);
  j["m_eps"] = report.m_eps;
  j["branch"] = std::string(to_string(report.branch));
  j["coloring"] = report.coloring ? Json(*report.coloring) : Json(nullptr);
  j["certificate"] = report.certificate ? to_json(*report.certificate) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["n"] = report.n;
  j["r"] = report.r;
  j["g0_order"] = report.g0_order;
  j["g0_min_degree"] = report.g0_min_degree;
  j["aes_condition"] = report.aes_fast_path;
  j["jointsize"] = report.jointsize ? Json(report.jointsize->str()) : Json(nullptr);
  j["diagnostics"] = report.diagnostics;
  j["regime"] = report.guaranteed ? "Guaranteed" : "Empirical";
  return j;
}

Json to_json(const ReductionOutcome& o) {
  Json j;
  j["n"] = o.n;
  j["n_prime"] = o.n_prime;
  j["case"] = std::string(to_string(o.kind));
  j["beta"] = to_string(o.beta);
  j["k"] = o.k;
  j["removed"] = o.removed;
  j["vertices"] = o.subgraph.original;
  j["order_ok"] = o.order_ok;
  j["contains_clique"] = o.contains_clique;
  j["min_degree_ok"] = o.min_degree_ok;
  j["density_ok"] = o.density_ok;
  j["tagged_property_holds"] = o.tagged_property_holds();
  j["regime"] = o.guaranteed ? "Guaranteed" : "Empirical";
  return j;
}

Json to_json(const CliqueSpectrum& spectrum) {
  Json counts = Json::array();
  for (const auto& c : spectrum.counts) counts.push_back(c.str());
  return Json{{"omega", spectrum.omega}, {"counts", counts}};
}

std::string moon_moser_csv(const std::vector<MoonMoserRow>& rows) {
  std::ostringstream out;
  out << "s,t,lhs_num,lhs_den,rhs_num,rhs_den,holds\n";
  for (const auto& row : rows)
    out << row.s << ',' << row.t << ',' << numerator(row.lhs) << ',' << denominator(row.lhs) << ','
        << numerator(row.rhs) << ',' << denominator(row.rhs) << ',' << (row.holds ? "true" : "false") << '\n';
  return out.str();
}

std::string bound_csv_header() {
  return "name,inputs,value_num,value_den,sqrt_coefficient,sqrt_radicand,measured,holds,regime,note";
}

std::string to_csv_row(const BoundReport& report) {
  std::ostringstream out;
  std::string inputs;
  for (const auto& [k, v] : report.inputs) {
    if (!inputs.empty()) inputs += ';';
    inputs += k + "=" + to_string(v);
  }
  out << report.name << ',' << inputs << ',' << numerator(report.value.rational) << ','
      << denominator(report.value.rational) << ',' << to_string(report.value.coefficient) << ','
      << to_string(report.value.radicand) << ',' << (report.measured ? to_string(*report.measured) : "") << ','
      << (report.holds ? (*report.holds ? "true" : "false") : "") << ',' << to_string(report.regime) << ',' << report.note;
  return out.str();
}

std::string peel_trace_csv(const PeelTrace& trace) {
  std::ostringstream out;
  out << "step,vertex,degree,edges_remaining\n";
  for (std::size_t i = 0; i < trace.order.size(); ++i)
    out << i << ',' << trace.order[i] << ',' << trace.degrees[i] << ',' << trace.edges_remaining[i] << '\n';
  return out.str();
}

}  // namespace joints
