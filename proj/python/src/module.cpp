#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "graphpoly/canonical.hpp"
#include "graphpoly/classes.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/experiments.hpp"
#include "graphpoly/graph6.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/mates.hpp"
#include "graphpoly/parallel.hpp"

namespace py = pybind11;
using namespace graphpoly;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

std::vector<std::string> graph_lines(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(write_graph_line(g));
  return out;
}

DeletionRelation relation_from_name(const std::string& name) {
  if (name == "isomorphic") return DeletionRelation::isomorphic;
  if (name == "cospectral") return DeletionRelation::cospectral;
  throw DomainError("relation must be isomorphic or cospectral, not '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph polynomial invariants, mate constructions and uniqueness experiments";

  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<NotSupportedError> not_supported(m, "NotSupportedError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceError& e) {
      PyErr_SetString(resource_error.ptr(), e.what());
    } catch (const NotSupportedError& e) {
      PyErr_SetString(not_supported.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("order") = 0)
      .def(py::init([](std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             Graph g(order);
             for (const auto& [a, b] : edges) g.add_edge(a, b);
             return g;
           }),
           py::arg("order"), py::arg("edges"))
      .def(py::init([](const std::string& line) { return parse_graph_line(line); }), py::arg("graph6"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("add_edge", &Graph::add_edge)
      .def("graph6", [](const Graph& g) { return write_graph_line(g); })
      .def("is_isomorphic", [](const Graph& a, const Graph& b) { return are_isomorphic(a, b); })
      .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph_line(g) + "')"; });
  py::implicitly_convertible<py::str, Graph>();

  m.def("polynomial_ids", [] {
    std::vector<std::string> out;
    for (auto id : all_polynomial_ids()) out.emplace_back(polynomial_name(id));
    return out;
  });
  m.def("class_names", &class_names);
  m.def("default_jobs", &default_jobs);

  m.def(
      "compute", [](const std::string& poly, const Graph& g) { return compute(polynomial_id(poly), g).to_string(); },
      py::arg("poly"), py::arg("graph"), "Polynomial value in normal form, as text.");
  m.def(
      "compute_json",
      [](const std::string& poly, const Graph& g) { return dump(compute(polynomial_id(poly), g).to_json()); },
      py::arg("poly"), py::arg("graph"));

  m.def(
      "enumerate_class",
      [](const std::string& cls, std::size_t n, std::size_t max_edges, std::size_t jobs) {
        const auto spec = class_spec(cls);
        py::gil_scoped_release release;
        return graph_lines(max_edges > 0 ? enumerate_class_sparse(spec, n, max_edges, jobs)
                                         : enumerate_class(spec, n, jobs));
      },
      py::arg("cls"), py::arg("n"), py::arg("max_edges") = 0, py::arg("jobs") = 1);

  m.def(
      "uniqueness_ratio_json",
      [](const std::string& poly, const std::string& cls, std::size_t n, std::size_t jobs) {
        const auto id = polynomial_id(poly);
        const auto spec = class_spec(cls);
        py::gil_scoped_release release;
        return dump(to_json(uniqueness_ratio(id, spec, n, jobs)));
      },
      py::arg("poly"), py::arg("cls"), py::arg("n"), py::arg("jobs") = 1);

  m.def(
      "find_pseudosimilar_trees",
      [](std::size_t max_order, const std::string& relation, std::size_t jobs) {
        const auto rel = relation_from_name(relation);
        std::vector<std::tuple<std::string, Vertex, Vertex>> out;
        py::gil_scoped_release release;
        for (const auto& p : find_pseudosimilar_trees(max_order, rel, jobs))
          out.emplace_back(write_graph_line(p.tree), p.u, p.v);
        return out;
      },
      py::arg("max_order"), py::arg("relation") = "isomorphic", py::arg("jobs") = 1,
      "(graph6, u, v) triples.");

  m.def(
      "verify_mate_json",
      [](const Graph& g, const Graph& h, const std::string& poly) {
        return dump(to_json(verify_mate(g, h, polynomial_id(poly))));
      },
      py::arg("g"), py::arg("h"), py::arg("poly"));
  m.def(
      "stem_toggle_json",
      [](const Graph& g) -> std::optional<std::string> {
        const auto c = stem_toggle(g);
        if (!c) return std::nullopt;
        return dump(to_json(*c));
      },
      py::arg("graph"));

  m.def(
      "dp_chain_audit_json",
      [](const std::string& cls, std::size_t n, std::size_t jobs) {
        const auto spec = class_spec(cls);
        py::gil_scoped_release release;
        return dump(to_json(dp_chain_audit(spec, n, jobs)));
      },
      py::arg("cls"), py::arg("n"), py::arg("jobs") = 1);

  m.def(
      "pendant_frequency_json",
      [](const Graph& pendant, Vertex root, const std::string& cls, std::size_t n, std::size_t samples,
         std::uint64_t seed, bool exhaustive) {
        const auto p = make_pendant(pendant, root);
        const auto spec = class_spec(cls);
        py::gil_scoped_release release;
        return dump(to_json(pendant_frequency(p, spec, n, samples, seed, exhaustive)));
      },
      py::arg("pendant"), py::arg("root"), py::arg("cls"), py::arg("n"), py::arg("samples"), py::arg("seed"),
      py::arg("exhaustive") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "", "Runs the command-line tool in-process: (status, stdout, stderr).");
}
