#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "impsep/errors.hpp"
#include "impsep/graph_io.hpp"
#include "impsep/graph_ops.hpp"
#include "impsep/multiway_cut.hpp"
#include "impsep/separator.hpp"
#include "impsep/witness.hpp"

namespace py = pybind11;
using namespace impsep;

namespace {

using Ids = std::vector<VertexId>;

VertexSet set_of(const Ids& ids) { return VertexSet(ids); }

std::optional<Ids> ids_of(const std::optional<Separator>& s) {
  if (!s) return std::nullopt;
  return s->cut().ids();
}

std::optional<Ids> ids_of(const std::optional<VertexSet>& s) {
  if (!s) return std::nullopt;
  return s->ids();
}

py::dict file_dict(const GraphFile& f) {
  py::dict d;
  d["graph"] = f.graph;
  d["x"] = ids_of(f.x);
  d["y"] = ids_of(f.y);
  d["terminals"] = ids_of(f.terminals);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Important vertex separators and multiway cut above the isolating-cut bound";

  static py::gil_safe_call_once_and_store<py::object> error_type;
  static py::gil_safe_call_once_and_store<py::object> parse_error_type;
  error_type.call_once_and_store_result([&] {
    return py::reinterpret_steal<py::object>(PyErr_NewException("impsep._core.Error", PyExc_ValueError, nullptr));
  });
  parse_error_type.call_once_and_store_result([&] {
    return py::reinterpret_steal<py::object>(
        PyErr_NewException("impsep._core.ParseError", error_type.get_stored().ptr(), nullptr));
  });
  m.attr("Error") = error_type.get_stored();
  m.attr("ParseError") = parse_error_type.get_stored();

  py::register_exception_translator([](std::exception_ptr p) {
    if (!p) return;
    try {
      std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = parse_error_type.get_stored()(e.what());
      err.attr("kind") = to_string(e.kind());
      err.attr("line") = e.line();
      PyErr_SetObject(parse_error_type.get_stored().ptr(), err.ptr());
    } catch (const Error& e) {
      py::object err = error_type.get_stored()(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.get_stored().ptr(), err.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const Ids& vertices, const std::vector<Edge>& edges, const Ids& undeletable) {
             return Graph::from_edges(vertices, edges, set_of(undeletable));
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("undeletable") = Ids{})
      .def_property_readonly("vertices", &Graph::vertices)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("undeletable", [](const Graph& g) { return g.undeletable().ids(); })
      .def("neighbors", [](const Graph& g, VertexId v) { return g.neighbors(v).ids(); })
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("neighborhood", [](const Graph& g, const Ids& c) { return neighborhood(g, set_of(c)).ids(); },
        py::arg("graph"), py::arg("c"));
  m.def("project", [](const Graph& g, const Ids& x, const Ids& y, const Ids& k) {
    return project(g, set_of(x), set_of(y), set_of(k));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k"));
  m.def("make_undeletable", [](const Graph& g, const Ids& s) { return make_undeletable(g, set_of(s)); },
        py::arg("graph"), py::arg("s"));

  m.def("min_separator", [](const Graph& g, const Ids& x, const Ids& y) {
    return ids_of(min_separator(g, set_of(x), set_of(y)));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), "A minimum X-Y separator, or None if none exists.");
  m.def("smallest_important_separator", [](const Graph& g, const Ids& x, const Ids& y) {
    return ids_of(smallest_important_separator(g, set_of(x), set_of(y)));
  }, py::arg("graph"), py::arg("x"), py::arg("y"));
  m.def("is_separator", [](const Graph& g, const Ids& x, const Ids& y, const Ids& k) {
    return is_separator(g, set_of(x), set_of(y), set_of(k));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k"));
  m.def("is_minimal", [](const Graph& g, const Ids& x, const Ids& y, const Ids& k) {
    return is_minimal(g, set_of(x), set_of(y), set_of(k));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k"));
  m.def("is_important", [](const Graph& g, const Ids& x, const Ids& y, const Ids& k) {
    const VertexSet xs = set_of(x);
    const VertexSet ys = set_of(y);
    return is_important(g, xs, ys, Separator::certify(g, xs, ys, set_of(k)));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k"));
  m.def("compare", [](const Graph& g, const Ids& x, const Ids& y, const Ids& k1, const Ids& k2) {
    const VertexSet xs = set_of(x);
    const VertexSet ys = set_of(y);
    return std::string(to_string(compare(g, xs, ys, Separator::certify(g, xs, ys, set_of(k1)),
                                         Separator::certify(g, xs, ys, set_of(k2)))));
  }, py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k1"), py::arg("k2"));
  m.def("normalize", [](const Graph& g, const Ids& x, const Ids& y) -> std::optional<std::pair<Graph, Ids>> {
    auto n = normalize(g, set_of(x), set_of(y));
    if (!n) return std::nullopt;
    return std::make_pair(std::move(n->graph), n->smallest.cut().ids());
  }, py::arg("graph"), py::arg("x"), py::arg("y"));

  m.def("enumerate_important",
        [](const Graph& g, const Ids& x, const Ids& y, std::size_t max_excess, unsigned threads)
            -> std::optional<std::vector<Ids>> {
          std::optional<std::vector<Separator>> found;
          {
            py::gil_scoped_release release;
            found = enumerate_important(g, set_of(x), set_of(y), max_excess, EnumerationOptions{threads});
          }
          if (!found) return std::nullopt;
          std::vector<Ids> out;
          for (const auto& s : *found) out.push_back(s.cut().ids());
          return out;
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("max_excess"), py::arg("threads") = 1,
        "Important X-Y separators of excess at most max_excess, smallest first; None if no separator exists.");
  m.def("binomial_bound", &binomial_bound, py::arg("n"), py::arg("k"));

  m.def("lower_bound_m", [](const Graph& g, const Ids& terminals) {
    const LowerBound lb = lower_bound_m(MwcInstance(g, set_of(terminals)));
    return std::make_pair(lb.m, lb.terminal);
  }, py::arg("graph"), py::arg("terminals"), "(m, terminal attaining m)");
  m.def("solve_budget", [](const Graph& g, const Ids& terminals, std::size_t budget) -> std::optional<Ids> {
    auto cut = solve_budget(MwcInstance(g, set_of(terminals)), budget);
    if (!cut) return std::nullopt;
    return cut->cut.ids();
  }, py::arg("graph"), py::arg("terminals"), py::arg("budget"));
  m.def("solve_above_guarantee",
        [](const Graph& g, const Ids& terminals, std::size_t k, bool parallel) -> std::optional<Ids> {
          std::optional<CutCertificate> cut;
          const MwcInstance inst(g, set_of(terminals));
          {
            py::gil_scoped_release release;
            cut = solve_above_guarantee(inst, k, SolveOptions{parallel});
          }
          if (!cut) return std::nullopt;
          return cut->cut.ids();
        },
        py::arg("graph"), py::arg("terminals"), py::arg("k"), py::arg("parallel") = false,
        "A multiway cut of size at most m + k, or None.");

  m.def("parse_graph_file", [](const std::string& text) { return file_dict(parse_graph_file(text)); },
        py::arg("text"));
  m.def("read_graph_file", [](const std::string& path) { return file_dict(read_graph_file(path)); },
        py::arg("path"));
}
