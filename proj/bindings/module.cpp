#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lame/bounds.hpp"
#include "lame/discriminant.hpp"
#include "lame/elliptic.hpp"
#include "lame/errors.hpp"
#include "lame/gamma.hpp"
#include "lame/hypergeometric.hpp"
#include "lame/legendre.hpp"
#include "lame/ode.hpp"
#include "lame/sweep.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace lame;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hill discriminant of the Lame equation: special-function "
              "kernels, monodromy integration, the closed-form approximant "
              "with rigorous error bounds, and certified stability verdicts.";

    py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_ArithmeticError);
    py::register_exception<PoleAtNonpositiveInteger>(m, "PoleAtNonpositiveInteger",
                                                     PyExc_ValueError);
    py::register_exception<SeriesDivergence>(m, "SeriesDivergence", PyExc_ArithmeticError);
    py::register_exception<StepLimitExceeded>(m, "StepLimitExceeded", PyExc_RuntimeError);
    py::register_exception<ToleranceUnachievable>(m, "ToleranceUnachievable",
                                                  PyExc_RuntimeError);
    py::register_exception<OmegaUndefined>(m, "OmegaUndefined", PyExc_ValueError);
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated",
                                                 PyExc_ValueError);
    py::register_exception<InvalidEnergy>(m, "InvalidEnergy", PyExc_ValueError);

    py::class_<Modulus>(m, "Modulus")
        .def_static("from_k", &Modulus::from_k, py::arg("k"))
        .def_static("from_kprime", &Modulus::from_kprime, py::arg("kprime"))
        .def_static("from_tau", &Modulus::from_tau, py::arg("tau"))
        .def_property_readonly("k", &Modulus::k)
        .def_property_readonly("kprime", &Modulus::kprime)
        .def_property_readonly("ksq", &Modulus::ksq)
        .def_property_readonly("kprime_sq", &Modulus::kprime_sq)
        .def_property_readonly("tau", &Modulus::tau)
        .def("__repr__", [](const Modulus& mod) {
            return "Modulus(k=" + format_sig15(mod.k()) + ")";
        });

    m.def("ellip_K", &ellip_K, py::arg("m"),
          "Complete elliptic integral of the first kind K(k).");
    m.def("ellip_E", &ellip_E, py::arg("m"),
          "Complete elliptic integral of the second kind E(k).");
    m.def(
        "jacobi_sn_cn_dn",
        [](double t, const Modulus& mod) {
            const JacobiTriple j = jacobi_sn_cn_dn(t, mod);
            return py::make_tuple(j.sn, j.cn, j.dn);
        },
        py::arg("t"), py::arg("m"), "Jacobi elliptic functions (sn, cn, dn) at (t, k).");
    m.def("complex_gamma", &complex_gamma, py::arg("z"),
          "Gamma function of a complex argument.");
    m.def("gauss_2f1", &gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"),
          "Gauss hypergeometric series F(a,b;c;x) for real x in [0,1).");

    py::class_<IntegrationConfig>(m, "IntegrationConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &IntegrationConfig::rel_tol)
        .def_readwrite("abs_tol", &IntegrationConfig::abs_tol)
        .def_readwrite("max_steps", &IntegrationConfig::max_steps);

    py::class_<FundamentalMatrix>(m, "FundamentalMatrix")
        .def_readonly("y1", &FundamentalMatrix::y1)
        .def_readonly("y1p", &FundamentalMatrix::y1p)
        .def_readonly("y2", &FundamentalMatrix::y2)
        .def_readonly("y2p", &FundamentalMatrix::y2p)
        .def("det", &FundamentalMatrix::det);

    m.def("fundamental_matrix", &fundamental_matrix, py::arg("q"), py::arg("a"),
          py::arg("b"), py::arg("cfg") = IntegrationConfig{},
          "Fundamental solution matrix of y'' + q(t) y = 0 over [a, b].");

    py::class_<LameParams>(m, "LameParams")
        .def(py::init<double, double, Modulus>(), py::arg("h"), py::arg("nu"),
             py::arg("m"))
        .def_property_readonly("h", &LameParams::h)
        .def_property_readonly("nu", &LameParams::nu)
        .def_property_readonly("modulus", &LameParams::modulus);

    py::class_<AsymptoticConstants>(m, "AsymptoticConstants")
        .def_readonly("omega", &AsymptoticConstants::omega)
        .def_readonly("B", &AsymptoticConstants::B)
        .def_readonly("amplitude", &AsymptoticConstants::amplitude)
        .def_readonly("phase", &AsymptoticConstants::phase);

    py::enum_<Verdict>(m, "Verdict")
        .value("ProvablyStable", Verdict::ProvablyStable)
        .value("ProvablyUnstable", Verdict::ProvablyUnstable)
        .value("NumericallyStable", Verdict::NumericallyStable)
        .value("NumericallyUnstable", Verdict::NumericallyUnstable)
        .value("Undetermined", Verdict::Undetermined);

    py::class_<DiscriminantReport>(m, "DiscriminantReport")
        .def_readonly("D", &DiscriminantReport::D)
        .def_readonly("approx", &DiscriminantReport::approx)
        .def_readonly("bound", &DiscriminantReport::bound)
        .def_readonly("verdict", &DiscriminantReport::verdict);

    m.def("q_lame", &q_lame, py::arg("t"), py::arg("p"),
          "Lame coefficient h - nu(nu+1) k^2 sn^2(t,k).");
    m.def("asymptotic_constants", &asymptotic_constants, py::arg("h"), py::arg("nu"));
    m.def("discriminant", &discriminant, py::arg("p"),
          py::arg("cfg") = IntegrationConfig{},
          "Hill discriminant D(h, nu, k) by monodromy integration.");
    m.def("approx_discriminant", &approx_discriminant, py::arg("p"),
          "Closed-form approximant 2 Re(B e^{2 i omega K}).");
    m.def("error_bound", &error_bound, py::arg("p"),
          "Rigorous bound on |D - approx_discriminant|.");
    m.def("classify", &classify, py::arg("p"), py::arg("cfg") = IntegrationConfig{},
          "Certified stability report.");
    m.def("map_pendulum", &map_pendulum, py::arg("gamma"), py::arg("energy"),
          "Coupled-pendulum parameters -> LameParams (nu = 1).");

    m.def("w1", &w1, py::arg("t"), py::arg("h"), py::arg("nu"));
    m.def("w2", &w2, py::arg("t"), py::arg("h"), py::arg("nu"));
    m.def("w1_prime", &w1_prime, py::arg("t"), py::arg("h"), py::arg("nu"));
    m.def("w2_prime", &w2_prime, py::arg("t"), py::arg("h"), py::arg("nu"));

    py::class_<ConnectionConstants>(m, "ConnectionConstants")
        .def_readonly("A1", &ConnectionConstants::A1)
        .def_readonly("A2", &ConnectionConstants::A2)
        .def_readonly("omega", &ConnectionConstants::omega);
    m.def("connection_constants", &connection_constants, py::arg("h"), py::arg("nu"));
    m.def("z_osc", &z_osc, py::arg("t"), py::arg("c"), py::arg("j"));
    m.def("z_osc_prime", &z_osc_prime, py::arg("t"), py::arg("c"), py::arg("j"));

    py::enum_<Theorem2Target>(m, "Theorem2Target")
        .value("w1", Theorem2Target::w1)
        .value("w2_prime", Theorem2Target::w2_prime);
    m.def("theorem2_bound", &theorem2_bound, py::arg("t"), py::arg("h"), py::arg("nu"),
          py::arg("which"));

    py::class_<BoundConstants>(m, "BoundConstants")
        .def_readonly("H", &BoundConstants::H)
        .def_readonly("C1", &BoundConstants::C1)
        .def_readonly("C1p", &BoundConstants::C1p)
        .def_readonly("C2", &BoundConstants::C2)
        .def_readonly("C2p", &BoundConstants::C2p);
    m.def("bound_constants",
          py::overload_cast<double, double>(&bound_constants), py::arg("h"),
          py::arg("nu"), "Bound constants at k = 1.");
    m.def("bound_constants",
          py::overload_cast<double, double, const Modulus&>(&bound_constants),
          py::arg("h"), py::arg("nu"), py::arg("m"));

    py::enum_<Theorem1Target>(m, "Theorem1Target")
        .value("y1", Theorem1Target::y1)
        .value("y2_prime", Theorem1Target::y2_prime);
    m.def("theorem1_bound", &theorem1_bound, py::arg("h"), py::arg("nu"), py::arg("m"),
          py::arg("which"));

    py::enum_<Monotonicity>(m, "Monotonicity")
        .value("nondecreasing", Monotonicity::nondecreasing)
        .value("nonincreasing", Monotonicity::nonincreasing);
    py::class_<SolutionEnvelope>(m, "SolutionEnvelope")
        .def_readonly("y1", &SolutionEnvelope::y1)
        .def_readonly("y1p", &SolutionEnvelope::y1p)
        .def_readonly("y2", &SolutionEnvelope::y2)
        .def_readonly("y2p", &SolutionEnvelope::y2p);
    m.def("lemma2_envelope", &lemma2_envelope, py::arg("q_min"), py::arg("q_max"),
          py::arg("dir"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("tau", &SweepRow::tau)
        .def_readonly("k", &SweepRow::k)
        .def_readonly("kprime", &SweepRow::kprime)
        .def_readonly("K", &SweepRow::K)
        .def_readonly("E", &SweepRow::E)
        .def_readonly("omega", &SweepRow::omega)
        .def_readonly("D", &SweepRow::D)
        .def_readonly("approx", &SweepRow::approx)
        .def_readonly("bound", &SweepRow::bound)
        .def_readonly("verdict", &SweepRow::verdict);
    m.def("compute_row", &compute_row, py::arg("h"), py::arg("nu"), py::arg("tau"),
          py::arg("cfg") = IntegrationConfig{});
    m.def("run_sweep", &run_sweep, py::arg("h"), py::arg("nu"), py::arg("tau_min"),
          py::arg("tau_max"), py::arg("steps"), py::arg("cfg") = IntegrationConfig{},
          py::arg("threads") = 0);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
