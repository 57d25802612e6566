#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "tdom/canonical.hpp"
#include "tdom/composites.hpp"
#include "tdom/families.hpp"
#include "tdom/graph.hpp"
#include "tdom/graph6.hpp"
#include "tdom/invariants.hpp"
#include "tdom/quasitree.hpp"
#include "tdom/verifier.hpp"

namespace py = pybind11;
using namespace tdom;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

VertexSet vertex_set(const Graph& g, const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
    s.insert(v);
  }
  return s;
}

py::bytes form_bytes(const CanonicalForm& f) { return py::bytes(f.bytes); }

}  // namespace

PYBIND11_MODULE(_tdom, m) {
  m.doc() = "Total domination and annihilation numbers of small graphs.";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return write_graph6(g); })
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("edges", &edge_pairs)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);
  m.def("parse_graph_text", &parse_graph_text, "graph6 or edge-list text");

  m.def("total_domination_number", [](const Graph& g) {
    DomResult r = total_domination_number(g);
    return py::make_tuple(r.gamma_t, r.witness.to_vector());
  }, "(gamma_t, minimum total dominating set)");
  m.def("total_domination_oracle", [](const Graph& g) { return total_domination_oracle(g).gamma_t; });
  m.def("annihilation_number", [](const Graph& g) {
    AnnihilationResult r = annihilation_number(g);
    return py::make_tuple(r.a, r.set.to_vector(), r.degree_sum);
  }, "(a, witness vertices, their degree sum)");
  m.def("is_total_dominating", [](const Graph& g, const std::vector<int>& s) {
    return is_total_dominating(vertex_set(g, s), g);
  });

  m.def("canonical_form", [](const Graph& g) { return form_bytes(canonical_form(g)); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def("triangulate", &triangulate);
  m.def("double_graph", &double_graph);
  m.def("mycielskian", &mycielskian);
  m.def("bijection_graph", [](const Graph& g, const Graph& h, std::optional<std::vector<int>> perm) {
    return bijection_graph(g, h, perm ? BijectionSpec(*perm) : BijectionSpec::identity(g.order()));
  }, py::arg("g"), py::arg("h"), py::arg("perm") = py::none());
  m.def("universally_identify", &universally_identify, py::arg("g"), py::arg("v"), py::arg("h"), py::arg("u"));

  m.def("enumerate_free_trees", &enumerate_free_trees);
  m.def("enumerate_gamma", [](int max_n) {
    std::vector<py::tuple> out;
    for (const GammaTree& t : enumerate_gamma(max_n)) out.push_back(py::make_tuple(t.tree(), t.status_string()));
    return out;
  }, "(tree, status string) for every family member up to max_n vertices");
  m.def("gamma_membership", &gamma_membership);
  m.def("enumerate_quasi_trees", &enumerate_quasi_trees);
  m.def("quasi_vertices", [](const Graph& g) { return quasi_vertices(g).to_vector(); });
  m.def("classify_type", [](const Graph& g) {
    QuasiTreeType t = classify_type(g);
    return py::make_tuple(t.kind == QuasiTreeType::Type1 ? 1 : 2, t.witness);
  }, "(1 or 2, witness quasi-vertex or None)");

  m.def("_verify_instance", [](const Graph& g, const std::string& family) {
    return to_json(verify_instance(g, family)).dump();
  });
  m.def("_verify_conjecture", [](const std::string& family, int min_n, int max_n, std::uint64_t seed, int count,
                                 int jobs) {
    Campaign c{.family = parse_family(family), .min_n = min_n, .max_n = max_n, .seed = seed, .count = count,
               .jobs = jobs};
    CampaignReport r;
    {
      py::gil_scoped_release release;
      r = verify_conjecture(c);
    }
    Json lines = Json::array();
    for (const VerificationRecord& rec : r.records) lines.push_back(to_json(rec));
    return Json{{"records", std::move(lines)}, {"summary", summary_json(r)}}.dump();
  });
  m.def("_replay_lemmas", [](std::uint64_t seed, int count) { return to_json(replay_lemmas(seed, count)).dump(); });

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
