#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thickness/bounds.hpp"
#include "thickness/constructions.hpp"
#include "thickness/document.hpp"
#include "thickness/pipeline.hpp"
#include "thickness/search.hpp"

namespace py = pybind11;
using namespace thickness;

namespace {

std::vector<std::string> vertex_strings(const Graph& g) {
  std::vector<std::string> out;
  out.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) out.push_back(v.str());
  return out;
}

std::vector<std::pair<std::string, std::string>> edge_strings(
    const std::vector<VertexPair>& edges) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.push_back({a.str(), b.str()});
  return out;
}

py::dict verdict_dict(const PlanarityVerdict& v, const Graph& g) {
  py::dict out;
  out["planar"] = v.planar;
  if (v.rotation) {
    py::dict rotation;
    for (int i = 0; i < g.vertex_count(); ++i) {
      py::list order;
      for (int j : (*v.rotation)[i]) order.append(g.vertex(j).str());
      rotation[py::str(g.vertex(i).str())] = order;
    }
    out["rotation"] = rotation;
  }
  if (v.kuratowski) out["kuratowski"] = edge_strings(*v.kuratowski);
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict out;
  out["valid"] = r.valid();
  out["partition_ok"] = r.partition_ok;
  out["coverage_ok"] = r.coverage_ok;
  py::list planar;
  for (const auto& v : r.page_verdicts) planar.append(v.planar);
  out["pages_planar"] = planar;
  out["pairing_ok"] = r.pairing_ok ? py::cast(*r.pairing_ok) : py::none();
  out["detail"] = r.detail;
  return out;
}

SearchBudget make_budget(double max_seconds, std::uint64_t max_nodes, int check_interval) {
  SearchBudget b;
  b.max_seconds = max_seconds;
  if (max_nodes > 0) b.max_nodes = max_nodes;
  b.planarity_check_interval = check_interval;
  return b;
}

}  // namespace

PYBIND11_MODULE(_thickness, m) {
  m.doc() = "planar decompositions and thickness results for products of complete graphs and paths";

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("vertices", [](const Graph& g) { return vertex_strings(g); })
      .def("edges", [](const Graph& g) { return edge_strings(g.edge_labels()); })
      .def("has_edge",
           [](const Graph& g, const std::string& a, const std::string& b) {
             return g.has_edge(parse_label(a), parse_label(b));
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly("host", &Decomposition::host)
      .def_property_readonly("page_count", &Decomposition::page_count)
      .def("page_edges",
           [](const Decomposition& d, int page) {
             return edge_strings(d.page_edge_labels(page));
           })
      .def("__repr__", [](const Decomposition& d) {
        return "Decomposition(" + std::to_string(d.page_count()) + " pages over " +
               std::to_string(d.host().edge_count()) + " edges)";
      });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("m"));
  m.def("cartesian_product", &cartesian_product, py::arg("g"), py::arg("h"));
  m.def("product_graph", &product_graph, py::arg("n"), py::arg("m"));
  m.def("build_chain_graph", &build_chain_graph, py::arg("n"), py::arg("m"));
  m.def(
      "delete_edge",
      [](const Graph& g, const std::string& a, const std::string& b) {
        return delete_edge(g, parse_label(a), parse_label(b));
      },
      py::arg("g"), py::arg("a"), py::arg("b"));

  m.def(
      "is_planar", [](const Graph& g) { return verdict_dict(is_planar(g), g); }, py::arg("g"));
  m.def("euler_edge_cap", &euler_edge_cap, py::arg("vertex_count"));
  m.def("euler_lower_bound", &euler_lower_bound, py::arg("g"));

  m.def("product_lower_bound", &product_lower_bound, py::arg("n"), py::arg("m"));
  m.def("complete_graph_thickness", &complete_graph_thickness, py::arg("n"));
  m.def("upper_bound_via_containment", &upper_bound_via_containment, py::arg("n"), py::arg("m"));
  m.def(
      "product_thickness",
      [](int n, int m) {
        ThicknessBound b = product_thickness(n, m);
        return py::make_tuple(b.lo, b.hi, provenance_name(b.provenance));
      },
      py::arg("n"), py::arg("m"),
      "thickness bracket (lo, hi, provenance); exact when lo == hi");

  m.def(
      "verify", [](const Decomposition& d) { return report_dict(verify(d)); }, py::arg("d"));
  m.def(
      "restrict_to",
      [](const Decomposition& d, const std::vector<std::string>& keep) {
        std::vector<VertexId> ids;
        for (const auto& s : keep) ids.push_back(parse_label(s));
        return restrict_to(d, ids);
      },
      py::arg("d"), py::arg("keep"));

  m.def(
      "double_decomposition",
      [](const Decomposition& base, const std::string& hub) {
        return double_decomposition(base, parse_label(hub));
      },
      py::arg("base"), py::arg("hub"));
  m.def("contract_chain", &contract_chain, py::arg("d"));
  m.def("expand_decomposition", &expand_decomposition, py::arg("d"));

  m.def(
      "find_decomposition",
      [](const Graph& g, int k, double max_seconds, std::uint64_t max_nodes,
         int check_interval) {
        SearchResult r = find_decomposition(g, k, {}, make_budget(max_seconds, max_nodes,
                                                                  check_interval));
        py::dict out;
        out["status"] = search_status_name(r.status);
        out["nodes"] = r.nodes;
        out["seconds"] = r.seconds;
        out["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
        return out;
      },
      py::arg("g"), py::arg("k"), py::arg("max_seconds") = 60.0, py::arg("max_nodes") = 0,
      py::arg("check_interval") = 0);
  m.def(
      "exact_thickness",
      [](const Graph& g, double max_seconds, std::uint64_t max_nodes, int check_interval) {
        ExactThicknessResult r =
            exact_thickness(g, make_budget(max_seconds, max_nodes, check_interval));
        py::dict out;
        out["lo"] = r.bound.lo;
        out["hi"] = r.bound.hi;
        out["exact"] = r.exact();
        out["nodes"] = r.nodes;
        out["seconds"] = r.seconds;
        out["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
        return out;
      },
      py::arg("g"), py::arg("max_seconds") = 60.0, py::arg("max_nodes") = 0,
      py::arg("check_interval") = 0);
  m.def("greedy_decomposition", &greedy_decomposition, py::arg("g"));

  m.def(
      "construct_product_decomposition",
      [](int n, int m, double max_seconds, int pages) {
        PipelineOptions options;
        options.budget.max_seconds = max_seconds;
        options.page_count = pages;
        return construct_product_decomposition(n, m, options).decomposition;
      },
      py::arg("n"), py::arg("m"), py::arg("max_seconds") = 60.0, py::arg("pages") = 0);

  m.def(
      "serialize_graph", [](const Graph& g) { return serialize_document(to_document(g)); },
      py::arg("g"));
  m.def(
      "serialize_decomposition",
      [](const Decomposition& d) { return serialize_document(to_document(d)); }, py::arg("d"));
  m.def(
      "parse_graph", [](const std::string& text) { return parse_document(text).host; },
      py::arg("text"));
  m.def(
      "parse_decomposition",
      [](const std::string& text) { return document_decomposition(parse_document(text)); },
      py::arg("text"));
  m.def(
      "to_dot_graph", [](const Graph& g) { return to_dot(to_document(g)); }, py::arg("g"));
  m.def(
      "to_dot_decomposition", [](const Decomposition& d) { return to_dot(to_document(d)); },
      py::arg("d"));
}
