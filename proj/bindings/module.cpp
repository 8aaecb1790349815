#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permlab/acceptance.hpp"
#include "permlab/asymptotic.hpp"
#include "permlab/diagram.hpp"
#include "permlab/extension.hpp"
#include "permlab/group_walk.hpp"
#include "permlab/lattice.hpp"
#include "permlab/series.hpp"

namespace py = pybind11;
using namespace permlab;

PYBIND11_MODULE(_permlab, m) {
    m.doc() = "core numerical routines for the permutation walk laboratory";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<LatticeSpec>(m, "Lattice")
        .def_readonly("d", &LatticeSpec::d)
        .def_readonly("L", &LatticeSpec::L)
        .def_readonly("N", &LatticeSpec::N)
        .def_readonly("edges", &LatticeSpec::edges)
        .def("coords", &LatticeSpec::coords)
        .def("vertex", &LatticeSpec::vertex);
    m.def("build_lattice", &build_lattice, py::arg("d"), py::arg("L"));

    py::class_<HeatKernelMatrix>(m, "HeatKernel")
        .def_readonly("t", &HeatKernelMatrix::t)
        .def_readonly("N", &HeatKernelMatrix::N)
        .def("entry", &HeatKernelMatrix::operator(), py::arg("i"), py::arg("j"))
        .def("column", &HeatKernelMatrix::column, py::arg("j"));
    m.def("heat_kernel", &heat_kernel_spectral, py::arg("lattice"), py::arg("t"));
    m.def("heat_kernel_ode", &heat_kernel_ode, py::arg("lattice"), py::arg("t"), py::arg("step"));

    py::class_<GroupDistribution>(m, "GroupDistribution")
        .def_readonly("t", &GroupDistribution::t)
        .def_readonly("N", &GroupDistribution::N)
        .def_readonly("weights", &GroupDistribution::weights);
    m.def("evolve_group", &evolve_group, py::arg("lattice"), py::arg("t"),
          py::arg("cap") = kDefaultGroupCap);
    m.def("marginal_of_vertex", &marginal_of_vertex, py::arg("lattice"), py::arg("dist"),
          py::arg("i"));

    py::class_<WalkSampleBatch>(m, "WalkSampleBatch")
        .def_readonly("seed", &WalkSampleBatch::seed)
        .def_readonly("t", &WalkSampleBatch::t)
        .def_readonly("samples", &WalkSampleBatch::samples)
        .def("to_jsonl", &WalkSampleBatch::to_jsonl);
    m.def("sample_walk", &sample_walk, py::arg("lattice"), py::arg("t"), py::arg("count"),
          py::arg("seed"), py::arg("threads") = 1);

    py::class_<PairPotentialSpec>(m, "PairPotential")
        .def(py::init<>())
        .def_readwrite("r", &PairPotentialSpec::r)
        .def_readwrite("active_pairs", &PairPotentialSpec::active_pairs)
        .def_readwrite("disable_all", &PairPotentialSpec::disable_all);
    py::class_<ConfigurationSpace>(m, "ConfigurationSpace")
        .def(py::init<const LatticeSpec&, std::uint64_t>(), py::arg("lattice"),
             py::arg("cap") = kDefaultStateCap)
        .def(py::init<const LatticeSpec&, int, std::uint64_t>(), py::arg("lattice"),
             py::arg("particles"), py::arg("cap") = kDefaultStateCap)
        .def_readonly("size", &ConfigurationSpace::size);
    py::class_<ExtendedField>(m, "ExtendedField")
        .def_readonly("t", &ExtendedField::t)
        .def_readonly("values", &ExtendedField::values);
    m.def("evolve_extended", &evolve_extended, py::arg("potential"), py::arg("space"),
          py::arg("t"), py::arg("step"));
    m.def("restrict_to_distinct", &restrict_to_distinct, py::arg("space"), py::arg("field"));
    m.def("total_mass", &total_mass_A, py::arg("field"));

    m.def("tree_sum_lower_limits", &T_n_lower_limits_value, py::arg("lattice"), py::arg("n"),
          py::arg("t"));
    m.def("tree_sum_full", &T_tilde_n_value, py::arg("lattice"), py::arg("n"), py::arg("t"),
          py::arg("step"));
    m.def("dyson_term", &dyson_oracle, py::arg("lattice"), py::arg("n"), py::arg("pair_sequence"),
          py::arg("t"), py::arg("step"), py::arg("distinct_z") = true);

    m.def("catalan", [](int K) {
        const auto table = catalan_by_recursion(K);
        std::vector<std::string> out;
        out.reserve(table.size());
        for (const auto& v : table) out.push_back(v.str());
        return out;
    }, py::arg("K"));
    m.def("generating_function", [](double z, int order) {
        const auto v = generating_function_value(z, order);
        return py::make_tuple(v.series, v.closed, v.tail_bound);
    }, py::arg("z"), py::arg("order"));

    m.def("thinned_exponent", [](double rho, int order) {
        const auto pt = rho_variant(rho, order);
        py::dict d;
        d["rho"] = pt.rho;
        d["p"] = pt.p;
        d["series"] = pt.q_tilde_series;
        d["target"] = pt.q_tilde_target;
        d["difference"] = pt.difference;
        d["p_equation_residual"] = pt.eq_p_residual;
        return d;
    }, py::arg("rho"), py::arg("order") = 64);
    m.def("permanent", &permanent_ryser, py::arg("kernel"));
    m.def("maximize_connected_count", [](int N, int I_max) {
        const auto r = maximize_connected_count(N, I_max);
        return py::make_tuple(r.profile.counts, r.q_N);
    }, py::arg("N"), py::arg("I_max"));

    m.def("run_acceptance", [](const std::string& artifact_dir) {
        py::list rows;
        for (const auto& r : run_acceptance(artifact_dir)) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["report_only"] = r.report_only;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            rows.append(d);
        }
        return rows;
    }, py::arg("artifact_dir") = "");
}
