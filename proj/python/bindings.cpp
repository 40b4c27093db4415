#include "joints/cliques.hpp"
#include "joints/edge_list.hpp"
#include "joints/error.hpp"
#include "joints/generators.hpp"
#include "joints/inequality.hpp"
#include "joints/joint.hpp"
#include "joints/report.hpp"
#include "joints/stability.hpp"
#include "joints/turan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace joints;

namespace {

// Exact integers cross the boundary as Python ints, exact rationals as fractions.Fraction.
py::object to_py(const BigInt& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(x)), to_py(denominator(x)));
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// Accepts int, Fraction, or a string such as "1/10000".
Rational to_rational(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

py::list edge_list(const std::vector<Edge>& edges) {
  py::list out;
  for (const auto& e : edges) out.append(py::make_tuple(e.u, e.v));
  return out;
}

VertexSet vertex_set(int n, const std::vector<int>& members) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v : members) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidVertex, "element " + std::to_string(v) + " outside [0, n)");
    s.insert(v);
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_joints, m) {
  m.doc() = "Exact clique counts, joints and Turan-type bounds on dense graphs";

  static py::exception<Error> error(m, "JointsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return make_graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", [](const Graph& g) { return g.edge_count(); })
      .def("edges", [](const Graph& g) { return edge_list(g.edges()); })
      .def("degree", &Graph::degree, py::arg("v"))
      .def("degrees", &Graph::degrees)
      .def_property_readonly("min_degree", &Graph::min_degree)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); }, py::arg("v"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("load_edge_list", &load_edge_list, py::arg("path"));
  m.def("save_edge_list", [](const Graph& g, const std::string& path) { save_edge_list(path, g); }, py::arg("graph"),
        py::arg("path"));
  m.def("format_edge_list", [](const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
  });
  m.def("parse_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  });

  m.def("turan_graph", &turan_graph, py::arg("n"), py::arg("r"));
  m.def("turan_graph_plus_edge", &turan_graph_plus_edge, py::arg("n"), py::arg("r"));
  m.def("turan_number", &turan_number, py::arg("n"), py::arg("r"));
  m.def("turan_min_degree", &turan_min_degree, py::arg("n"), py::arg("r"));
  m.def("is_turan_graph", &is_turan_graph, py::arg("graph"), py::arg("r"));

  m.def("count_cliques", [](const Graph& g, int s) { return to_py(count_cliques(g, s)); }, py::arg("graph"),
        py::arg("s"));
  m.def("clique_spectrum", [](const Graph& g) {
    py::list out;
    for (const auto& c : clique_spectrum(g).counts) out.append(to_py(c));
    return out;
  }, py::arg("graph"), "[k_1, ..., k_omega]");
  m.def("find_clique", &find_clique, py::arg("graph"), py::arg("s"));
  m.def("edge_clique_count", [](const Graph& g, int u, int v, int q) { return to_py(edge_clique_count(g, u, v, q)); },
        py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("q"));
  m.def("moon_moser_report", [](const Graph& g) {
    py::list out;
    for (const auto& row : moon_moser_report(g)) {
      py::dict d;
      d["s"] = row.s;
      d["t"] = row.t;
      d["lhs"] = to_py(row.lhs);
      d["rhs"] = to_py(row.rhs);
      d["holds"] = row.holds;
      out.append(d);
    }
    return out;
  }, py::arg("graph"));

  m.def("jointsize", [](const Graph& g, int q, unsigned threads) {
    const auto js = jointsize(g, q, threads);
    py::object witness = js.witness ? py::object(py::make_tuple(js.witness->u, js.witness->v)) : py::none();
    return py::make_tuple(to_py(js.size), witness);
  }, py::arg("graph"), py::arg("q"), py::arg("threads") = 0, "(size, witness edge or None)");
  m.def("extract_joint", [](const Graph& g, int q, std::pair<int, int> edge, std::size_t limit) {
    return to_py(to_json(extract_joint(g, q, Edge::of(edge.first, edge.second), limit)));
  }, py::arg("graph"), py::arg("q"), py::arg("edge"), py::arg("limit") = 16);
  m.def("find_large_joint", [](const Graph& g, int r, std::size_t limit, unsigned threads) {
    const auto lj = find_large_joint(g, r, limit, threads);
    Json j = to_json(lj.certificate, &lj.bound);
    j["route"] = lj.route;
    j["certificate_valid"] = certificate_valid(g, lj.certificate, limit);
    return to_py(j);
  }, py::arg("graph"), py::arg("r"), py::arg("limit") = 16, py::arg("threads") = 0);
  m.def("thexj_reduce", [](const Graph& g, int r) { return to_py(to_json(thexj_reduce(g, r))); }, py::arg("graph"),
        py::arg("r"));
  m.def("tightness_ratio", [](int n, int r, unsigned threads) { return to_py(tightness_ratio(n, r, threads)); },
        py::arg("n"), py::arg("r"), py::arg("threads") = 0);

  m.def("check_stability", [](const Graph& g, int r, const py::object& alpha, unsigned threads) {
    StabilityOptions options;
    options.threads = threads;
    return to_py(to_json(check_stability(g, r, to_rational(alpha), options)));
  }, py::arg("graph"), py::arg("r"), py::arg("alpha"), py::arg("threads") = 0);
  m.def("r_colorable", [](const Graph& g, int r) { return r_colorable(g, r); }, py::arg("graph"), py::arg("r"));

  m.def("intersection_sums", [](int n, const std::vector<std::vector<int>>& sets) {
    std::vector<VertexSet> members;
    for (const auto& s : sets) members.push_back(vertex_set(n, s));
    py::list out;
    for (const auto& x : intersection_sums(SetSystem(n, std::move(members)))) out.append(to_py(x));
    return out;
  }, py::arg("n"), py::arg("sets"), "[S_1, ..., S_r] for the sets over ground set {0..n-1}");
  m.def("typms_lower_bound", [](const py::object& s1, int n, int k) {
    return to_py(typms_lower_bound(BigInt(py::str(s1).cast<std::string>()), n, k));
  }, py::arg("s1"), py::arg("n"), py::arg("k"));
  m.def("eval_bound", [](const std::string& name, const py::kwargs& inputs) {
    BoundInputs in;
    for (const auto& [key, value] : inputs) in[key.cast<std::string>()] = to_rational(value);
    return to_py(to_json(eval_bound(name, in)));
  }, py::arg("name"), "eval_bound(name, n=..., r=..., [c=..., alpha=...])");
  m.def("bound_names", &bound_names);

  m.def("gnm", &gnm, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("turan_plus_edges", &turan_plus_edges, py::arg("n"), py::arg("r"), py::arg("extra"), py::arg("seed"));
  m.def("turan_perturbed", &turan_perturbed, py::arg("n"), py::arg("r"), py::arg("removed"), py::arg("added"),
        py::arg("seed"));
}
