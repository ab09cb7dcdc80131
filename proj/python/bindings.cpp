// Copyright 2026 The qac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qac/anticlone.hpp"
#include "qac/cli.hpp"
#include "qac/errors.hpp"
#include "qac/optimizer.hpp"
#include "qac/probclone.hpp"

namespace py = pybind11;
using namespace qac;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

py::array_t<cplx> to_numpy(const CMatrix &m) {
    py::array_t<cplx> out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
    return out;
}

py::array_t<cplx> to_numpy(const CVector &v) {
    py::array_t<cplx> out(v.dim());
    auto view = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < v.dim(); ++i) view(i) = v[i];
    return out;
}

CMatrix from_numpy(const ComplexArray &a) {
    if (a.ndim() != 2) throw InputError("expected a two-dimensional array");
    CMatrix m(a.shape(0), a.shape(1));
    auto view = a.unchecked<2>();
    for (py::ssize_t r = 0; r < a.shape(0); ++r)
        for (py::ssize_t c = 0; c < a.shape(1); ++c) m(r, c) = view(r, c);
    return m;
}

StateSet to_state_set(const std::vector<std::pair<cplx, cplx>> &states) {
    StateSet s;
    for (const auto &[a, b] : states) s.states.push_back({a, b});
    return s;
}

OptimizerConfig make_config(std::size_t restarts, std::size_t max_iters, std::size_t ancilla_dim,
                            std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.ancilla_dim = ancilla_dim;
    cfg.seed = seed;
    return cfg;
}

py::dict result_dict(const OptimizerResult &r) {
    py::dict d;
    d["best_value"] = r.best_value;
    d["best_params"] = r.best_params;
    d["per_restart_values"] = r.per_restart_values;
    d["max_evaluated_objective"] = r.max_evaluated_objective;
    d["max_isometry_defect"] = r.max_isometry_defect;
    d["evaluations"] = r.evaluations;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum anti-cloning verification primitives";

    py::register_exception<RankError>(m, "RankError", PyExc_RuntimeError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<ValidityError>(m, "ValidityError", PyExc_RuntimeError);

    py::class_<BlochVector>(m, "BlochVector")
        .def(py::init<double, double, double>(), py::arg("nx"), py::arg("ny"), py::arg("nz"))
        .def_readwrite("nx", &BlochVector::nx)
        .def_readwrite("ny", &BlochVector::ny)
        .def_readwrite("nz", &BlochVector::nz)
        .def("norm", &BlochVector::norm)
        .def("__repr__", [](const BlochVector &b) {
            return "BlochVector(" + std::to_string(b.nx) + ", " + std::to_string(b.ny) + ", " +
                   std::to_string(b.nz) + ")";
        });

    py::class_<QubitState>(m, "QubitState")
        .def(py::init<cplx, cplx>(), py::arg("alpha"), py::arg("beta"))
        .def_readwrite("alpha", &QubitState::alpha)
        .def_readwrite("beta", &QubitState::beta)
        .def("density", [](const QubitState &s) { return to_numpy(s.density()); });

    m.def("bloch_to_state", &bloch_to_state, py::arg("n"));
    m.def("state_to_bloch", [](const ComplexArray &rho) { return state_to_bloch(from_numpy(rho)); }, py::arg("rho"));
    m.def("antiunitary_flip", py::overload_cast<const QubitState &>(&antiunitary_flip), py::arg("psi"));
    m.def("fidelity_direction", [](const ComplexArray &rho, const BlochVector &n) {
        return fidelity_direction(from_numpy(rho), n);
    }, py::arg("rho"), py::arg("n"));

    m.def("partial_trace", [](const ComplexArray &rho, std::vector<std::size_t> dims, std::vector<std::size_t> keep) {
        return to_numpy(partial_trace(from_numpy(rho), dims, keep));
    }, py::arg("rho"), py::arg("dims"), py::arg("keep"));
    m.def("hermitian_eigenvalues", [](const ComplexArray &h) { return hermitian_eigenvalues(from_numpy(h)); },
          py::arg("h"));

    m.def("paper_isometry", [] { return to_numpy(paper_isometry()); });
    m.def("anticlone", [](const QubitState &psi, std::optional<ComplexArray> v) {
        const CloneOutput out = anticlone(psi, v ? from_numpy(*v) : paper_isometry());
        py::dict d;
        d["rho1"] = to_numpy(out.rho1);
        d["rho2"] = to_numpy(out.rho2);
        d["f1"] = out.f1;
        d["f2"] = out.f2;
        d["eta1"] = out.eta1;
        d["eta2"] = out.eta2;
        return d;
    }, py::arg("psi"), py::arg("v") = py::none());
    m.def("optimal_constraint_residuals", [] {
        py::dict d;
        for (const auto &r : constraint_residuals(paper_params()).residuals) d[py::str(r.name)] = r.value;
        return d;
    });
    m.def("measure_prepare_baseline", [](std::uint64_t samples, std::uint64_t seed) {
        const BaselineReport b = measure_prepare_baseline(samples, seed);
        py::dict d;
        d["avg_fidelity_clone"] = b.avg_fidelity_clone;
        d["avg_fidelity_anticlone"] = b.avg_fidelity_anticlone;
        d["stderr_clone"] = b.stderr_clone;
        d["stderr_anticlone"] = b.stderr_anticlone;
        d["samples"] = b.samples;
        return d;
    }, py::arg("samples"), py::arg("seed") = 0);

    m.def("optimize_universal", [](std::size_t restarts, std::size_t max_iters, std::size_t ancilla_dim,
                                   std::uint64_t seed) {
        const auto cfg = make_config(restarts, max_iters, ancilla_dim, seed);
        OptimizerResult r;
        {
            py::gil_scoped_release release;
            r = optimize_universal(cfg);
        }
        return result_dict(r);
    }, py::arg("restarts") = 20, py::arg("max_iters") = 600, py::arg("ancilla_dim") = 4, py::arg("seed") = 0);
    m.def("optimize_spinflip", [](std::size_t restarts, std::size_t max_iters, std::size_t ancilla_dim,
                                  std::uint64_t seed) {
        const auto cfg = make_config(restarts, max_iters, ancilla_dim, seed);
        OptimizerResult r;
        {
            py::gil_scoped_release release;
            r = optimize_spinflip(cfg);
        }
        return result_dict(r);
    }, py::arg("restarts") = 20, py::arg("max_iters") = 600, py::arg("ancilla_dim") = 4, py::arg("seed") = 0);

    m.def("max_feasible_f", [](const std::vector<std::pair<cplx, cplx>> &states, std::size_t L, std::size_t M) {
        const FeasibilityResult r = max_feasible_f(to_state_set(states), {L, M});
        py::dict d;
        d["f_max"] = r.f_max;
        d["min_eigenvalue_at_f"] = r.min_eigenvalue_at_f;
        d["min_eigenvalue_above"] = r.min_eigenvalue_above;
        d["gram_G"] = to_numpy(r.gram_G);
        d["gram_H"] = to_numpy(r.gram_H);
        return d;
    }, py::arg("states"), py::arg("L") = 1, py::arg("M") = 1);
    m.def("two_state_efficiency", [](double c, std::size_t L, std::size_t M) {
        return two_state_efficiency(c, {L, M});
    }, py::arg("overlap"), py::arg("L") = 1, py::arg("M") = 1);
    m.def("build_two_state_anticloner", [](double theta) {
        const ProbCloner pc = build_two_state_anticloner(theta);
        py::dict d;
        d["U"] = to_numpy(pc.U);
        d["f"] = pc.f;
        d["theta"] = pc.theta;
        return d;
    }, py::arg("theta"));
    m.def("run_prob_anticlone", [](double theta, int which, std::uint64_t shots, std::uint64_t seed) {
        const ShotStats st = run_prob_anticlone(build_two_state_anticloner(theta), which, shots, seed);
        py::dict d;
        d["shots"] = st.shots;
        d["successes"] = st.successes;
        d["success_probability"] = st.success_probability;
        d["success_frequency"] = st.success_frequency;
        d["post_selected_fidelity"] = st.post_selected_fidelity;
        return d;
    }, py::arg("theta"), py::arg("which"), py::arg("shots") = 100000, py::arg("seed") = 0);
    m.def("build_prob_spinflip", [](const QubitState &m1, const QubitState &m2) {
        const ProbSpinFlip sf = build_prob_spinflip(m1, m2);
        return py::make_tuple(to_numpy(sf.U), sf.F);
    }, py::arg("m1"), py::arg("m2"));

    m.def("run_cli", [](const std::vector<std::string> &args) { return cli::main_entry(args); }, py::arg("args"),
          "Runs the command-line program with `args` (no program name) and returns its exit code.");
}
