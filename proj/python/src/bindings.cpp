#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "finhankel/errors.hpp"
#include "finhankel/io.hpp"
#include "finhankel/quadrature.hpp"

namespace py = pybind11;
using namespace finhankel;

namespace {

using TermTuple = std::tuple<complex, complex, complex>;

QuadratureConfig make_config(double tol, int max_panels, int nodes) {
    QuadratureConfig cfg;
    cfg.target_rel_tol = tol;
    cfg.max_panels = max_panels;
    cfg.nodes_per_panel = nodes;
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite Hankel transforms of radial profiles with endpoint singularities";

    py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ProfileParseError", PyExc_ValueError);
    py::register_exception<rule_violation>(m, "RuleViolation", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<RadialProfile>(m, "RadialProfile")
        .def(py::init([](int dimension, const std::vector<TermTuple>& terms, bool vanishes) {
                 std::vector<ProfileTerm> out;
                 for (const auto& [c, l, r] : terms) out.push_back({c, l, r});
                 return RadialProfile(dimension, std::move(out), vanishes);
             }),
             py::arg("dimension"), py::arg("terms"), py::arg("vanishes_near_one") = false,
             "terms: sequence of (coeff, lambda, rho), each c s^lambda (1 - s^2)^(rho - 1)")
        .def_static("from_json", [](const std::string& text) { return parse_profile(text); }, py::arg("text"))
        .def("to_json", [](const RadialProfile& p) { return profile_to_json(p).dump(); })
        .def_property_readonly("dimension", &RadialProfile::dimension)
        .def_property_readonly("nu", &RadialProfile::nu)
        .def_property_readonly("mu", &RadialProfile::mu)
        .def_property_readonly("vanishes_near_one", &RadialProfile::vanishes_near_one)
        .def_property_readonly("terms",
                               [](const RadialProfile& p) {
                                   std::vector<TermTuple> out;
                                   for (const auto& t : p.terms()) out.emplace_back(t.coeff, t.lambda, t.rho);
                                   return out;
                               })
        .def("scaled", &RadialProfile::scaled, py::arg("factor"))
        .def("__call__", [](const RadialProfile& p, double s) { return evaluate(p, s); }, py::arg("s"));

    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("error_estimate", &QuadratureResult::error_estimate)
        .def_readonly("panels_used", &QuadratureResult::panels_used)
        .def_readonly("tolerance_met", &QuadratureResult::tolerance_met)
        .def("__repr__", [](const QuadratureResult& q) {
            return "QuadratureResult(value=" + py::repr(py::cast(q.value)).cast<std::string>() +
                   ", error_estimate=" + std::to_string(q.error_estimate) + ")";
        });

    m.def(
        "finite_hankel",
        [](const RadialProfile& p, double r, double tol, int max_panels, int nodes) {
            return finite_hankel(p, r, make_config(tol, max_panels, nodes));
        },
        py::arg("profile"), py::arg("r"), py::arg("tol") = 1e-10, py::arg("max_panels") = 20000,
        py::arg("nodes_per_panel") = 32, "integral over [0, 1] of profile(s) J_nu(r s) ds");
    m.def(
        "radial_fourier",
        [](const RadialProfile& p, double r, double tol) { return radial_fourier(p, r, make_config(tol, 20000, 32)); },
        py::arg("profile"), py::arg("r"), py::arg("tol") = 1e-10);

    py::class_<AsymptoticTerm>(m, "AsymptoticTerm")
        .def_readonly("amplitude", &AsymptoticTerm::amplitude)
        .def_readonly("exponent", &AsymptoticTerm::exponent)
        .def_property_readonly("phase_offset",
                               [](const AsymptoticTerm& t) -> std::optional<complex> {
                                   if (!t.phase) return std::nullopt;
                                   return t.phase->offset;
                               })
        .def("__call__", &AsymptoticTerm::evaluate, py::arg("r"));

    py::class_<Prediction>(m, "Prediction")
        .def_readonly("origin_terms", &Prediction::origin_terms)
        .def_readonly("boundary_terms", &Prediction::boundary_terms)
        .def_readonly("valid_error_order", &Prediction::valid_error_order)
        .def("__call__", [](const Prediction& p, double r) { return evaluate_prediction(p, r); }, py::arg("r"));

    m.def("predict", &predict, py::arg("profile"), py::arg("n_origin_terms") = 1, py::arg("max_k") = 8,
          py::arg("max_j") = 8);
    m.def(
        "expand_json",
        [](const RadialProfile& p, int n_terms, int max_k) { return expansion_to_json(p, n_terms, max_k).dump(); },
        py::arg("profile"), py::arg("n_origin_terms") = 1, py::arg("max_k") = 8);
    m.def(
        "classify_json",
        [](const RadialProfile& p, int max_k, std::optional<int> N) {
            return certificate_to_json(certify(classify(p, max_k, N))).dump();
        },
        py::arg("profile"), py::arg("max_k") = 8, py::arg("N") = py::none());
    m.def(
        "slow_decrease_json",
        [](const RadialProfile& p, double r_min, double r_max, double tol, bool windows) {
            QuadratureConfig cfg;
            cfg.target_rel_tol = tol;
            cfg.validate();
            CheckReport report;
            {
                py::gil_scoped_release release;
                report = verify_profile_slow_decrease(p, r_min, r_max, cfg);
            }
            return check_report_to_json(report, windows).dump();
        },
        py::arg("profile"), py::arg("r_min") = 50.0, py::arg("r_max") = 2000.0, py::arg("tol") = 1e-10,
        py::arg("windows") = false);

    m.def("bessel_j", [](double nu, double x) { return specfun::bessel_j(Order{nu}, x); }, py::arg("nu"), py::arg("x"));
    m.def("gamma", &specfun::gamma, py::arg("z"));
    m.def("reciprocal_gamma", &specfun::reciprocal_gamma, py::arg("z"));
}
