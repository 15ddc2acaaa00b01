#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sq17/color.hpp"
#include "sq17/discharge.hpp"
#include "sq17/gen.hpp"
#include "sq17/metrics.hpp"
#include "sq17/reduce.hpp"
#include "sq17/square.hpp"

namespace py = pybind11;
using namespace sq17;

PYBIND11_MODULE(sq17py, m) {
    m.doc() = "Coloring squares of planar graphs with maximum degree 5";

    py::register_exception<Error>(m, "Sq17Error");

    py::class_<EmbeddedGraph>(m, "EmbeddedGraph")
        .def_static("from_rotations", &EmbeddedGraph::build_from_rotations,
                    py::arg("n"), py::arg("rotations"))
        .def_property_readonly("vertex_count", &EmbeddedGraph::vertex_count)
        .def_property_readonly("edge_count", &EmbeddedGraph::edge_count)
        .def_property_readonly("face_count", &EmbeddedGraph::face_count)
        .def("degree", &EmbeddedGraph::degree)
        .def("rotation", &EmbeddedGraph::rotation)
        .def("has_edge", &EmbeddedGraph::has_edge)
        .def("max_degree", &EmbeddedGraph::max_degree)
        .def("connected", &EmbeddedGraph::connected)
        .def("delete_vertex", &EmbeddedGraph::delete_vertex)
        .def("delete_edge", &EmbeddedGraph::delete_edge)
        .def("__repr__", [](const EmbeddedGraph& g) {
            return "<EmbeddedGraph V=" + std::to_string(g.vertex_count()) +
                   " E=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<SquareColoring>(m, "SquareColoring")
        .def_readonly("assignment", &SquareColoring::assignment)
        .def_readonly("palette_size", &SquareColoring::palette_size)
        .def("colors_used", &SquareColoring::colors_used);

    py::class_<ReductionWitness>(m, "ReductionWitness")
        .def_readonly("lemma_tag", &ReductionWitness::lemma_tag)
        .def("serialize", &ReductionWitness::serialize);

    m.def("parse_epg", &parse_epg_string, py::arg("text"));
    m.def("to_epg", &to_epg, py::arg("graph"));
    m.def("named_graph", &named_graph, py::arg("name"));
    m.def("named_instances", &named_instances);
    m.def("gen_random_delta5",
          [](int n, std::uint64_t seed) { return gen_random_delta5({n, seed}); },
          py::arg("n"), py::arg("seed"));

    m.def("color_square_17", &color_square_17, py::arg("graph"),
          py::arg("palette") = kPaletteSize);
    m.def("verify_square_coloring",
          [](const EmbeddedGraph& g, const SquareColoring& c) {
              std::vector<std::tuple<int, int, int>> out;
              for (const auto& v : verify_square_coloring(g, c))
                  out.emplace_back(v.u, v.v, v.distance);
              return out;
          },
          py::arg("graph"), py::arg("coloring"));
    m.def("to_sqc", &to_sqc, py::arg("coloring"));

    m.def("n2_set", &n2_set, py::arg("graph"), py::arg("v"));
    m.def("n2_upper_bound", &n2_upper_bound, py::arg("graph"), py::arg("v"));

    m.def("find_reduction", &find_reduction, py::arg("graph"),
          py::arg("palette") = kPaletteSize);

    m.def("chi2_exact",
          py::overload_cast<const EmbeddedGraph&, int>(&chi2_exact),
          py::arg("graph"), py::arg("vertex_limit") = kDefaultOracleLimit);

    m.def("audit_text", [](const EmbeddedGraph& g) { return to_text(audit(g)); },
          py::arg("graph"));
    m.def("audit_total_fifteenths",
          [](const EmbeddedGraph& g) { return audit(g).total_fifteenths; },
          py::arg("graph"));
}
