#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphzz/duality.hpp"
#include "graphzz/generator.hpp"
#include "graphzz/oracle.hpp"
#include "graphzz/zigzag_one.hpp"
#include "graphzz/zigzag_zero.hpp"

namespace py = pybind11;
using namespace graphzz;

namespace {

std::vector<std::pair<index_t, index_t>> as_pairs(const barcode& bc) {
    std::vector<std::pair<index_t, index_t>> out;
    for (const interval& iv : bc.intervals) out.emplace_back(iv.birth, iv.death);
    return out;
}

}  // namespace

PYBIND11_MODULE(_graphzz, m) {
    m.doc() = "zigzag persistence barcodes of graph filtrations";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<validation_error>(m, "ValidationError");
    py::register_exception<invariant_error>(m, "InvariantError");

    py::class_<zigzag_filtration>(m, "Filtration")
        .def_property_readonly("dim", [](const zigzag_filtration& f) { return f.dim; })
        .def_property_readonly("num_arrows", &zigzag_filtration::size)
        .def("validate", &zigzag_filtration::validate)
        .def("to_text", &serialize_filtration)
        .def("__len__", &zigzag_filtration::size)
        .def("__repr__", [](const zigzag_filtration& f) {
            return "<Filtration dim=" + std::to_string(f.dim) + " arrows=" +
                   std::to_string(f.size()) + ">";
        });

    m.def("parse_filtration", &parse_filtration, py::arg("text"));
    m.def("generate_random",
          [](index_t n, index_t m, std::uint64_t seed, const std::string& model) {
              return generate_random(n, m, seed, parse_model(model));
          },
          py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("model") = "dynamic-er");
    m.def("generate_planar", &generate_planar, py::arg("grid"), py::arg("m"), py::arg("seed"),
          py::arg("with_triangles") = false);
    m.def("barcode0",
          [](const zigzag_filtration& f) { return as_pairs(compute_barcode0(f)); },
          py::arg("filtration"));
    m.def("barcode1",
          [](const zigzag_filtration& f) { return as_pairs(compute_barcode1(f)); },
          py::arg("filtration"));
    m.def("codim1",
          [](const zigzag_filtration& f) { return as_pairs(compute_codim1(f)); },
          py::arg("filtration"));
    m.def("oracle_barcode",
          [](const zigzag_filtration& f, int p) {
              return as_pairs(oracle::oracle_barcode(f, p));
          },
          py::arg("filtration"), py::arg("p"));
}
