#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "qunc/bounds.hpp"
#include "qunc/error.hpp"
#include "qunc/generators.hpp"
#include "qunc/io.hpp"
#include "qunc/q_algebra.hpp"
#include "qunc/search.hpp"

namespace py = pybind11;
using namespace qunc;

PYBIND11_MODULE(_qunc, m) {
  m.doc() = "Eigenvalue-weighted uncertainty bounds for q-commutators";

  py::register_exception<Error>(m, "QuncError", PyExc_ValueError);

  py::enum_<QRegime>(m, "QRegime")
      .value("PositiveLeqOne", QRegime::PositiveLeqOne)
      .value("PositiveGtOne", QRegime::PositiveGtOne)
      .value("Zero", QRegime::Zero)
      .value("NegativeGeqMinusOne", QRegime::NegativeGeqMinusOne)
      .value("LtMinusOne", QRegime::LtMinusOne);
  m.def("classify", &classify, py::arg("q"));

  py::class_<HermitianMatrix>(m, "HermitianMatrix")
      .def_property_readonly("dim", &HermitianMatrix::dim)
      .def_property_readonly("matrix", &HermitianMatrix::matrix);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("eigenvalues", &DensityMatrix::eigenvalues)
      .def_property_readonly("eigenvectors", &DensityMatrix::eigenvectors)
      .def_property_readonly("lambda_min", &DensityMatrix::lambda_min)
      .def_property_readonly("lambda_max", &DensityMatrix::lambda_max);

  m.def("make_hermitian", py::overload_cast<const CMatrix&>(&make_hermitian), py::arg("entries"));
  m.def("make_density", py::overload_cast<const CMatrix&>(&make_density), py::arg("entries"));
  m.def("center", &center, py::arg("a"), py::arg("rho"));
  m.def("variance", &variance, py::arg("rho"), py::arg("a"));
  m.def("eigenbasis_elements", &eigenbasis_elements, py::arg("rho"), py::arg("x"));

  m.def("q_commutator", &q_commutator, py::arg("a"), py::arg("b"), py::arg("q"));
  m.def("q_anticommutator", &q_anticommutator, py::arg("a"), py::arg("b"), py::arg("q"));
  m.def("trace_form", &trace_form, py::arg("rho"), py::arg("m"));
  m.def("q_trace_term", &q_trace_term, py::arg("rho"), py::arg("a0"), py::arg("b0"), py::arg("q"));

  m.def(
      "refined_coefficient",
      [](double q, double lmin, double lmax) -> double {
        const Coefficient c = refined_coefficient(q, lmin, lmax);
        return c.infinite ? std::numeric_limits<double>::infinity() : c.value;
      },
      py::arg("q"), py::arg("lambda_min"), py::arg("lambda_max"),
      "Returns inf when the denominator vanishes.");
  m.def("robertson_bound", &robertson_bound, py::arg("rho"), py::arg("a"), py::arg("b"));
  m.def("naive_q_bound", &naive_q_bound, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("q"));
  m.def("refined_q_bound", &refined_q_bound, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("q"));
  m.def("kimura_bound", &kimura_bound, py::arg("rho"), py::arg("a"), py::arg("b"));
  m.def("lemma_G", &lemma_G, py::arg("t"), py::arg("q"));
  m.def("lemma_F", &lemma_F, py::arg("t"), py::arg("q"));
  m.def(
      "schwarz_intermediate",
      [](const DensityMatrix& rho, const HermitianMatrix& a0, const HermitianMatrix& b0, double q) {
        const SchwarzTerms s = schwarz_intermediate(rho, a0, b0, q);
        return py::make_tuple(s.lhs, s.rhs);
      },
      py::arg("rho"), py::arg("a0"), py::arg("b0"), py::arg("q"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("dim", &BoundReport::dim)
      .def_readonly("q", &BoundReport::q)
      .def_readonly("regime", &BoundReport::regime)
      .def_readonly("var_a", &BoundReport::var_a)
      .def_readonly("var_b", &BoundReport::var_b)
      .def_readonly("product", &BoundReport::product)
      .def_readonly("lambda_min", &BoundReport::lambda_min)
      .def_readonly("lambda_max", &BoundReport::lambda_max)
      .def_readonly("robertson", &BoundReport::robertson)
      .def_readonly("naive_q", &BoundReport::naive_q)
      .def_readonly("refined", &BoundReport::refined)
      .def_readonly("kimura", &BoundReport::kimura)
      .def_readonly("slack", &BoundReport::slack)
      .def_readonly("ratio", &BoundReport::ratio)
      .def("satisfies", &BoundReport::satisfies, py::arg("rel_tol") = kInequalityRelTol)
      .def("__repr__", [](const BoundReport& r) { return "BoundReport(" + io::report_to_json(r).dump() + ")"; });
  m.def("bound_report", &bound_report, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("q"));

  py::class_<SeededRng>(m, "SeededRng")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
      .def_property_readonly("seed", &SeededRng::seed)
      .def_property_readonly("stream", &SeededRng::stream)
      .def("uniform", py::overload_cast<>(&SeededRng::uniform))
      .def("normal", &SeededRng::normal)
      .def("derive", &SeededRng::derive, py::arg("index"));
  m.def("random_hermitian", &random_hermitian, py::arg("n"), py::arg("rng"));
  m.def("random_density", &random_density, py::arg("n"), py::arg("rank"), py::arg("rng"));
  m.def("maximally_mixed", &maximally_mixed, py::arg("n"));

  py::class_<Instance>(m, "Instance")
      .def_readonly("rho", &Instance::rho)
      .def_readonly("a", &Instance::a)
      .def_readonly("b", &Instance::b)
      .def_readonly("q", &Instance::q)
      .def("to_json", [](const Instance& i) { return io::instance_to_json(i).dump(); });
  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best_ratio", &SearchResult::best_ratio)
      .def_readonly("best_instance", &SearchResult::best_instance)
      .def_readonly("evaluations", &SearchResult::evaluations)
      .def_readonly("trajectory", &SearchResult::trajectory);

  m.def("tightness_ratio", &tightness_ratio, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("q"));
  m.def(
      "maximize_tightness",
      [](std::size_t n, double q, std::size_t budget, const SeededRng& rng, std::size_t workers) {
        py::gil_scoped_release release;
        return maximize_tightness(n, q, budget, rng, SearchOptions{.workers = workers});
      },
      py::arg("n"), py::arg("q"), py::arg("budget"), py::arg("rng"), py::arg("workers") = 1);
  m.def(
      "sweep_q",
      [](const DensityMatrix& rho, const HermitianMatrix& a, const HermitianMatrix& b,
         const std::vector<double>& grid) { return sweep_q(rho, a, b, grid); },
      py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("q_grid"));
}
