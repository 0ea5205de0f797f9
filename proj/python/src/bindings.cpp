#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stablekernel/asymptotics.hpp"
#include "stablekernel/bounds.hpp"
#include "stablekernel/cli.hpp"
#include "stablekernel/errors.hpp"
#include "stablekernel/hankel.hpp"
#include "stablekernel/kernels.hpp"
#include "stablekernel/oracle.hpp"
#include "stablekernel/special_functions.hpp"

namespace py = pybind11;
using namespace stablekernel;

namespace {

// Accepts a KappaOrder, an int or a "num/den" string; floats are refused on purpose.
KappaOrder to_kappa(const py::object& obj) {
    if (py::isinstance<KappaOrder>(obj)) return obj.cast<KappaOrder>();
    if (py::isinstance<py::bool_>(obj)) throw py::type_error("kappa must be a KappaOrder, int or 'num/den' string");
    if (py::isinstance<py::int_>(obj)) return KappaOrder(obj.cast<std::int64_t>());
    if (py::isinstance<py::str>(obj)) return KappaOrder::parse(obj.cast<std::string>());
    throw py::type_error("kappa must be a KappaOrder, int or 'num/den' string (floats are not exact)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Isotropic alpha-stable transition densities, their fractional derivatives and tail constants.";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParityError>(m, "ParityError", domain_error.ptr());
    py::register_exception<ResolutionError>(m, "ResolutionError", domain_error.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
    py::register_exception<NoConvergenceError>(m, "NoConvergenceError", PyExc_RuntimeError);

    py::class_<KappaOrder>(m, "KappaOrder")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
        .def_static("parse", &KappaOrder::parse)
        .def_property_readonly("num", &KappaOrder::num)
        .def_property_readonly("den", &KappaOrder::den)
        .def_property_readonly("value", &KappaOrder::value)
        .def("is_integer", &KappaOrder::is_integer)
        .def("is_even_integer", &KappaOrder::is_even_integer)
        .def("is_odd_integer", &KappaOrder::is_odd_integer)
        .def("__float__", &KappaOrder::value)
        .def("__str__", &KappaOrder::to_string)
        .def("__repr__", [](const KappaOrder& k) { return "KappaOrder('" + k.to_string() + "')"; })
        .def(py::self == py::self);

    // special functions
    m.def("gamma", static_cast<double (*)(double)>(&stablekernel::gamma), py::arg("x"));
    m.def("bessel_j", [](double mu, double t) { return bessel_j(BesselOrder(mu), t); }, py::arg("mu"), py::arg("t"));
    m.def("bessel_j_zeros", [](double mu, int n) { return bessel_j_zeros(BesselOrder(mu), n); }, py::arg("mu"),
          py::arg("n"));
    m.def("bessel_k", [](double mu, double x) { return bessel_k(BesselOrder(mu), x); }, py::arg("mu"), py::arg("x"));
    m.def("bessel_k_complex", [](double mu, std::complex<double> z) { return bessel_k(BesselOrder(mu), z); },
          py::arg("mu"), py::arg("z"));

    // quadrature
    py::enum_<Strategy>(m, "Strategy")
        .value("small_r_direct", Strategy::small_r_direct)
        .value("direct_accelerated", Strategy::direct_accelerated)
        .value("contour", Strategy::contour)
        .value("tail_series", Strategy::tail_series)
        .value("closed_form", Strategy::closed_form);
    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("err_estimate", &QuadResult::err_estimate)
        .def_readonly("strategy", &QuadResult::strategy)
        .def_readonly("evals", &QuadResult::evals);
    py::class_<HankelIntegrand>(m, "HankelIntegrand")
        .def(py::init<double, double, double, double>(), py::arg("nu"), py::arg("mu"), py::arg("alpha"), py::arg("r"))
        .def_readwrite("nu", &HankelIntegrand::nu)
        .def_readwrite("mu", &HankelIntegrand::mu)
        .def_readwrite("alpha", &HankelIntegrand::alpha)
        .def_readwrite("r", &HankelIntegrand::r);
    m.def("radial_integrand", &radial_integrand, py::arg("d"), py::arg("kappa"), py::arg("alpha"), py::arg("r"));
    m.def("eval_I", [](const HankelIntegrand& in, double tol) { return eval_I(in, tol); }, py::arg("integrand"),
          py::arg("tol") = kDefaultTol);
    m.def("eval_I_direct", [](const HankelIntegrand& in, double tol) { return eval_I_direct(in, tol); },
          py::arg("integrand"), py::arg("tol") = kDefaultTol);
    m.def(
        "eval_I_contour",
        [](const HankelIntegrand& in, std::optional<double> beta, double tol) {
            return beta ? eval_I_contour(in, *beta, tol) : eval_I_contour(in, tol);
        },
        py::arg("integrand"), py::arg("beta") = py::none(), py::arg("tol") = kDefaultTol);
    m.def("eval_I_tail_series", [](const HankelIntegrand& in, double tol) { return eval_I_tail_series(in, tol); },
          py::arg("integrand"), py::arg("tol") = kDefaultTol);
    m.def("choose_strategy", [](const HankelIntegrand& in, double tol) { return choose_strategy(in, tol); },
          py::arg("integrand"), py::arg("tol") = kDefaultTol);
    m.def("admissible_beta", [](double alpha) {
        const auto b = admissible_beta(alpha);
        return py::make_tuple(b.lower, b.upper);
    }, py::arg("alpha"));
    m.def("hankel_moment", &hankel_moment, py::arg("nu"), py::arg("mu"));
    m.def("recursion_residual",
          [](int d, double kappa, double alpha, double r, double tol) {
              return recursion_residual(d, kappa, alpha, r, tol);
          },
          py::arg("d"), py::arg("kappa"), py::arg("alpha"), py::arg("r"), py::arg("tol") = kDefaultTol);

    // kernels
    py::class_<StableParams>(m, "StableParams")
        .def(py::init([](int d, double alpha, double c) {
                 StableParams p{d, alpha, c};
                 p.validate();
                 return p;
             }),
             py::arg("d"), py::arg("alpha"), py::arg("c") = 1.0)
        .def_readonly("d", &StableParams::d)
        .def_readonly("alpha", &StableParams::alpha)
        .def_readonly("c", &StableParams::c);
    py::class_<KernelValue>(m, "KernelValue")
        .def_readonly("value", &KernelValue::value)
        .def_readonly("err_estimate", &KernelValue::err_estimate)
        .def_readonly("strategy", &KernelValue::strategy)
        .def_readonly("evals", &KernelValue::evals);
    m.def("eval_D", [](int d, double alpha, const py::object& k, double radius,
                       double tol) { return eval_D(d, alpha, to_kappa(k), radius, tol); },
          py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("radius"), py::arg("tol") = kDefaultTol);
    m.def("eval_N",
          [](int d, double alpha, const py::object& k, std::vector<double> x, double tol) {
              return eval_N(d, alpha, to_kappa(k), x, tol);
          },
          py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("x"), py::arg("tol") = kDefaultTol);
    m.def("eval_density",
          [](const StableParams& p, double t, std::vector<double> x, std::vector<double> y, double tol) {
              return eval_density(p, t, x, y, tol);
          },
          py::arg("params"), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("tol") = kDefaultTol);
    m.def("frac_laplacian_g",
          [](const StableParams& p, const py::object& k, double t, std::vector<double> x, std::vector<double> y,
             double tol) { return frac_laplacian_g(p, to_kappa(k), t, x, y, tol).value; },
          py::arg("params"), py::arg("kappa"), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("tol") = kDefaultTol);
    m.def("frac_gradient_g",
          [](const StableParams& p, const py::object& k, double t, std::vector<double> x, std::vector<double> y,
             double tol) { return frac_gradient_g(p, to_kappa(k), t, x, y, tol); },
          py::arg("params"), py::arg("kappa"), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("tol") = kDefaultTol);
    m.def("gradient_identity_residual",
          [](int d, double alpha, const py::object& k, std::vector<double> x, double tol) {
              return gradient_identity_residual(d, alpha, to_kappa(k), x, tol);
          },
          py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("x"), py::arg("tol") = kDefaultTol);

    // asymptotics
    py::enum_<Branch>(m, "Branch")
        .value("generic_D", Branch::generic_D)
        .value("even_D", Branch::even_D)
        .value("generic_N", Branch::generic_N)
        .value("odd_N", Branch::odd_N)
        .value("lemma1", Branch::lemma1);
    py::class_<AsymptoticConstant>(m, "AsymptoticConstant")
        .def_readonly("value", &AsymptoticConstant::value)
        .def_readonly("branch", &AsymptoticConstant::branch)
        .def_readonly("decay_exponent", &AsymptoticConstant::decay_exponent);
    m.def("lemma1_limit", &lemma1_limit, py::arg("nu"), py::arg("mu"));
    m.def("k_bessel_moment", &k_bessel_moment, py::arg("nu"), py::arg("mu"));
    auto constant = [&m](const char* name, AsymptoticConstant (*fn)(int, double, const KappaOrder&)) {
        m.def(name, [fn](int d, double alpha, const py::object& k) { return fn(d, alpha, to_kappa(k)); },
              py::arg("d"), py::arg("alpha"), py::arg("kappa"));
    };
    constant("const_D", &const_D);
    constant("const_D_even", &const_D_even);
    constant("const_N", &const_N);
    constant("const_N_odd", &const_N_odd);
    constant("tail_constant_D", &tail_constant_D);
    constant("tail_constant_N", &tail_constant_N);
    m.def("tail_D", [](int d, double alpha, const py::object& k, double r) { return tail_D(d, alpha, to_kappa(k), r); },
          py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("radius"));
    m.def("tail_N", [](int d, double alpha, const py::object& k, double r) { return tail_N(d, alpha, to_kappa(k), r); },
          py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("radius"));

    // bounds
    py::class_<CertReport>(m, "CertReport")
        .def_readonly("check", &CertReport::check)
        .def_readonly("passed", &CertReport::passed)
        .def_readonly("tolerance_used", &CertReport::tolerance_used)
        .def_readonly("empirical_constants", &CertReport::empirical_constants)
        .def_readonly("notes", &CertReport::notes)
        .def_property_readonly("thresholds",
                               [](const CertReport& r) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& t : r.thresholds) out.emplace_back(t.epsilon, t.radius);
                                   return out;
                               })
        .def_property_readonly("ratios",
                               [](const CertReport& r) {
                                   std::vector<double> out;
                                   for (const auto& row : r.rows) out.push_back(row.ratio);
                                   return out;
                               })
        .def("constant", &CertReport::constant)
        .def("to_csv", [](const CertReport& r) {
            std::ostringstream s;
            r.write_csv(s);
            return s.str();
        });
    m.def("default_t_grid", &default_t_grid);
    m.def("default_radius_grid", &default_radius_grid);
    m.def("bg_certify",
          [](const StableParams& p, std::vector<double> ts, std::vector<double> rs, double tol) {
              return bg_certify(p, ts, rs, tol);
          },
          py::arg("params"), py::arg("t_list"), py::arg("radius_list"), py::arg("tol") = kDefaultTol,
          py::call_guard<py::gil_scoped_release>());
    m.def("sup_bound_check",
          [](const StableParams& p, const py::object& k, std::vector<double> ts, std::vector<double> rs, double tol) {
              const KappaOrder kappa = to_kappa(k);
              py::gil_scoped_release release;
              return sup_bound_check(p, kappa, ts, rs, tol);
          },
          py::arg("params"), py::arg("kappa"), py::arg("t_list"), py::arg("radius_list"),
          py::arg("tol") = kDefaultTol);
    m.def("classical_bound_check",
          [](const StableParams& p, const py::object& k, std::vector<double> ts, std::vector<double> rs, double tol) {
              const KappaOrder kappa = to_kappa(k);
              py::gil_scoped_release release;
              return classical_bound_check(p, kappa, ts, rs, tol);
          },
          py::arg("params"), py::arg("kappa"), py::arg("t_list"), py::arg("radius_list"),
          py::arg("tol") = kDefaultTol);
    m.def("threshold_finder",
          [](int d, double alpha, const py::object& k, std::vector<double> eps, const std::string& quantity,
             double tol, double radius_budget) {
              const KappaOrder kappa = to_kappa(k);
              if (quantity != "laplacian" && quantity != "gradient") {
                  throw DomainError("quantity must be 'laplacian' or 'gradient'");
              }
              ThresholdOptions opt;
              opt.radius_budget = radius_budget;
              py::gil_scoped_release release;
              return threshold_finder(d, alpha, kappa, eps,
                                      quantity == "laplacian" ? TailQuantity::laplacian : TailQuantity::gradient, tol,
                                      opt);
          },
          py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("epsilons"), py::arg("quantity") = "laplacian",
          py::arg("tol") = kDefaultTol, py::arg("radius_budget") = 1e4);

    // oracle
    m.def("cauchy_density", &oracle::cauchy_density, py::arg("d"), py::arg("c"), py::arg("t"), py::arg("radius"));
    m.def("cauchy_derivatives", &oracle::cauchy_derivatives, py::arg("d"), py::arg("c"), py::arg("t"), py::arg("x"),
          py::arg("order"));
    m.def(
        "tensor_grid_D",
        [](int d, double alpha, double kappa, std::vector<double> x, double L, int n) {
            const auto r = oracle::tensor_grid_D(d, alpha, kappa, x, L, n);
            return py::make_tuple(r.value, r.refinement);
        },
        py::arg("d"), py::arg("alpha"), py::arg("kappa"), py::arg("x"), py::arg("L"), py::arg("n"),
        "Returns (value, |value(n) - value(n/2)|).");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
