#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mellinsphere/fn_oracles.hpp"
#include "mellinsphere/hypersphere.hpp"
#include "mellinsphere/saddle.hpp"
#include "mellinsphere/specfun.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
namespace ms = mellinsphere;

PYBIND11_MODULE(_core, m)
{
    m.doc() = R"pbdoc(
        Laplace transform of the invariant measure on high-dimensional hyperspheres
        ---------------------------------------------------------------------------

        Special functions, saddle-point data (gamma(lambda), L(lambda), the
        critical point) and four independent evaluators of ln F_n(lambda).
    )pbdoc";

    py::register_exception<ms::NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    // specfun
    m.attr("EULER_CONSTANT") = ms::specfun::euler_constant;
    m.def("ln_gamma", &ms::specfun::ln_gamma, py::arg("x"));
    m.def("ln_gamma_complex", &ms::specfun::ln_gamma_complex, py::arg("s"));
    m.def("digamma", &ms::specfun::digamma, py::arg("x"));
    m.def("trigamma", &ms::specfun::trigamma, py::arg("x"));
    m.def("ln_bessel_k0", [](double x) { return ms::specfun::bessel_k0(x).ln(); }, py::arg("x"),
          "ln K_0(x)");

    // saddle
    py::class_<ms::saddle::SaddleSolution>(m, "SaddleSolution")
        .def_readonly("lambda_", &ms::saddle::SaddleSolution::lambda)
        .def_readonly("gamma", &ms::saddle::SaddleSolution::gamma)
        .def_readonly("ln_L", &ms::saddle::SaddleSolution::ln_L)
        .def_readonly("sigma", &ms::saddle::SaddleSolution::sigma)
        .def("__repr__", [](const ms::saddle::SaddleSolution& s) {
            return "SaddleSolution(lambda=" + std::to_string(s.lambda) + ", gamma=" + std::to_string(s.gamma) +
                   ", ln_L=" + std::to_string(s.ln_L) + ", sigma=" + std::to_string(s.sigma) + ")";
        });
    py::class_<ms::saddle::CriticalPoint>(m, "CriticalPoint")
        .def_readonly("gamma_cr", &ms::saddle::CriticalPoint::gamma_cr)
        .def_readonly("lambda_cr", &ms::saddle::CriticalPoint::lambda_cr)
        .def_readonly("residual", &ms::saddle::CriticalPoint::residual);

    m.def("inverse_digamma", &ms::saddle::inverse_digamma, py::arg("y"));
    m.def("solve_saddle", &ms::saddle::solve_saddle, py::arg("lambda_"));
    m.def("ln_L", [](double lambda) { return ms::saddle::L_value(lambda).ln(); }, py::arg("lambda_"));
    m.def("ln_L_legendre", [](double lambda) { return ms::saddle::L_value_legendre(lambda).ln(); },
          py::arg("lambda_"));
    m.def("critical_point", &ms::saddle::critical_point);
    m.def("gamma_asymptotic_zero", &ms::saddle::gamma_asymptotic_zero, py::arg("lambda_"));
    m.def("tabulate", [](const std::vector<double>& grid) { return ms::saddle::tabulate(grid); },
          py::arg("lambda_grid"));

    // oracles
    py::enum_<ms::Method>(m, "Method")
        .value("closed_form", ms::Method::closed_form)
        .value("quadrature", ms::Method::quadrature)
        .value("contour", ms::Method::contour)
        .value("monte_carlo", ms::Method::monte_carlo)
        .value("asymptotic", ms::Method::asymptotic);
    py::class_<ms::OracleResult>(m, "OracleResult")
        .def_property_readonly("ln_value", [](const ms::OracleResult& r) { return r.value.ln(); })
        .def_readonly("error_estimate", &ms::OracleResult::abs_error_estimate_of_ln)
        .def_readonly("method", &ms::OracleResult::method);
    py::class_<ms::oracles::ContourSpec>(m, "ContourSpec")
        .def(py::init<double, double, double>(), py::arg("gamma"), py::arg("half_width"), py::arg("step"));

    m.def("f1_exact", &ms::oracles::f1_exact, py::arg("lambda_"));
    m.def("f2_exact", &ms::oracles::f2_exact, py::arg("lambda_"));
    m.def("fn_quadrature", &ms::oracles::fn_quadrature, py::arg("n"), py::arg("lambda_"), py::arg("tol") = 1e-10);
    m.def("fn_contour", &ms::oracles::fn_contour, py::arg("n"), py::arg("lambda_"), py::arg("spec") = py::none(),
          py::arg("truncation_tol") = 1e-14);
    m.def("fn_saddle_asymptotic", &ms::oracles::fn_saddle_asymptotic, py::arg("n"), py::arg("lambda_"));
    m.def("fn_montecarlo", &ms::oracles::fn_montecarlo, py::arg("n"), py::arg("lambda_"), py::arg("samples"),
          py::arg("seed"));

    // hypersphere
    m.def("geometric_mean", [](const std::vector<double>& f) { return ms::hypersphere::geometric_mean(f); },
          py::arg("f"));
    m.def(
        "laplace_dn",
        [](const std::vector<double>& f, double r, ms::Method method, std::int64_t samples, std::uint64_t seed) {
            return ms::hypersphere::laplace_dn({static_cast<int>(f.size()), r, f}, {method, 1e-10, samples, seed});
        },
        py::arg("f"), py::arg("r"), py::arg("method") = ms::Method::contour, py::arg("samples") = 1'000'000,
        py::arg("seed") = 1);
    m.def(
        "classify_regime",
        [](double lambda_eff, double epsilon) {
            const auto report = ms::hypersphere::classify_regime(lambda_eff, epsilon);
            return py::make_tuple(std::string(ms::hypersphere::to_string(report.regime)), report.margin);
        },
        py::arg("lambda_eff"), py::arg("epsilon"), "Returns (regime, lambda_eff - lambda_cr).");
    m.def("unit_crossing", &ms::hypersphere::unit_crossing, py::arg("n"));
    m.def(
        "psi_theta",
        [](double theta, const std::vector<double>& f, const std::vector<double>& weights) {
            return ms::hypersphere::psi_theta({theta, f, weights}).ln();
        },
        py::arg("theta"), py::arg("f"), py::arg("weights"), "ln Psi_theta(f)");
    m.def(
        "ensemble_comparison",
        [](const std::vector<double>& f, double theta, double radius_c, double radius_alpha,
           const std::vector<int>& n_grid, double epsilon, bool pinned_critical) {
            const auto rows = ms::hypersphere::ensemble_comparison(f, theta, {radius_c, radius_alpha, pinned_critical},
                                                                   n_grid, epsilon);
            py::list out;
            for (const auto& r : rows) {
                out.append(py::make_tuple(r.n, r.lambda_eff, r.ln_D_over_n,
                                          std::string(ms::hypersphere::to_string(r.regime)), r.ln_psi_theta));
            }
            return out;
        },
        py::arg("f"), py::arg("theta"), py::arg("radius_c"), py::arg("radius_alpha"), py::arg("n_grid"),
        py::arg("epsilon"), py::arg("pinned_critical") = false,
        "Rows (n, lambda_eff, ln_D_over_n, regime, ln_psi_theta).");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
