#include "doctest.h"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "stablekernel/asymptotics.hpp"
#include "stablekernel/errors.hpp"
#include "stablekernel/kernels.hpp"
#include "stablekernel/quadrature.hpp"
#include "stablekernel/special_functions.hpp"

using namespace stablekernel;
using std::numbers::pi;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

KappaOrder exact(double alpha) {
    // α values used below have at most two decimals.
    return KappaOrder(static_cast<std::int64_t>(std::llround(alpha * 100.0)), 100);
}

double surface(int d) { return 2.0 * std::pow(pi, d / 2.0) / stablekernel::gamma(d / 2.0); }
}  // namespace

TEST_CASE("StableParams validation") {
    CHECK_NOTHROW(StableParams{2, 1.5, 0.3}.validate());
    CHECK_THROWS_AS((StableParams{0, 1.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((StableParams{1, 2.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((StableParams{1, 0.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((StableParams{1, 1.0, 0.0}.validate()), DomainError);
}

TEST_CASE("eval_D: examples") {
    CHECK(rel(eval_D(1, 1.0, KappaOrder(0), 1.0).value, 1.0 / (2.0 * pi)) <= 1e-9);
    const auto origin = eval_D(1, 1.0, KappaOrder(0), 0.0);
    CHECK(rel(origin.value, 1.0 / pi) <= 1e-14);
    CHECK(origin.strategy == Strategy::closed_form);
    CHECK(rel(eval_D(3, 1.0, KappaOrder(0), 0.0).value, 1.0 / (pi * pi)) <= 1e-14);
    CHECK(rel(eval_D_origin(2, 0.8, 0.5), surface(2) * stablekernel::gamma(2.5 / 0.8) / 0.8 / std::pow(2.0 * pi, 2)) <=
          1e-14);
    CHECK_THROWS_AS(eval_D(2, 1.0, KappaOrder(-2), 1.0), DomainError);
    CHECK_THROWS_AS(eval_D(1, 1.0, KappaOrder(0), -1.0), DomainError);
}

TEST_CASE("eval_D: d-dimensional Cauchy density") {
    for (int d : {1, 2, 3, 4, 5}) {
        for (double r : {0.0, 0.3, 1.0, 4.0, 25.0, 150.0}) {
            const double exact = stablekernel::gamma((d + 1) / 2.0) / std::pow(pi, (d + 1) / 2.0) /
                                 std::pow(1.0 + r * r, (d + 1) / 2.0);
            CAPTURE(d);
            CAPTURE(r);
            CHECK(rel(eval_D(d, 1.0, KappaOrder(0), r, 1e-10).value, exact) <= 1e-8);
        }
    }
}

TEST_CASE("eval_N: examples and symmetry") {
    const std::array<double, 1> x1{1.0};
    const auto n1 = eval_N(1, 1.0, KappaOrder(1), x1, 1e-10);
    CHECK(std::fabs(n1[0].real()) == 0.0);
    CHECK(rel(n1[0].imag(), 1.0 / (2.0 * pi)) <= 1e-9);

    const std::array<double, 3> zero{0.0, 0.0, 0.0};
    for (const auto& v : eval_N(3, 1.5, KappaOrder(1, 2), zero)) CHECK(v == std::complex<double>(0.0, 0.0));

    const std::array<double, 3> axis{2.0, 0.0, 0.0};
    const auto na = eval_N(3, 1.5, KappaOrder(1, 2), axis);
    CHECK(na[0].real() == 0.0);
    CHECK(na[0].imag() != 0.0);
    CHECK(na[1] == std::complex<double>(0.0, 0.0));
    CHECK(na[2] == std::complex<double>(0.0, 0.0));

    const std::array<double, 3> off{1.0, 2.0, -0.5};
    const auto no = eval_N(3, 1.2, KappaOrder(3, 4), off);
    for (int i = 1; i < 3; ++i) {
        CHECK(std::fabs(no[i].imag() / off[i] - no[0].imag() / off[0]) <= 1e-12 * std::fabs(no[0].imag() / off[0]));
    }

    CHECK_THROWS_AS(eval_N(2, 1.0, KappaOrder(-1), off), DomainError);
    CHECK_THROWS_AS(eval_N(2, 1.0, KappaOrder(1), off), DomainError);  // wrong coordinate count
}

TEST_CASE("eval_density: examples, symmetry and positivity") {
    const std::array<double, 1> o{0.0};
    const std::array<double, 1> four{4.0};
    CHECK(rel(eval_density({1, 1.0, 1.0}, 1.0, o, o), 1.0 / pi) <= 1e-12);
    CHECK(rel(eval_density({1, 1.0, 2.0}, 3.0, four, o), 6.0 / (52.0 * pi)) <= 1e-9);
    const std::array<double, 2> a{0.3, -1.2};
    const std::array<double, 2> b{2.0, 0.5};
    const StableParams p{2, 1.3, 0.7};
    CHECK(eval_density(p, 0.4, a, b) == eval_density(p, 0.4, b, a));
    CHECK_THROWS_AS(eval_density(p, 0.0, a, b), DomainError);

    for (int d : {1, 2, 3}) {
        for (double alpha : {0.6, 1.0, 1.7}) {
            for (double t : {0.01, 1.0, 50.0}) {
                for (double r : {0.0, 0.5, 3.0, 40.0, 500.0}) {
                    CHECK(eval_density_radial({d, alpha, 1.3}, t, r).value > 0.0);
                }
            }
        }
    }
}

TEST_CASE("normalization: the density integrates to one") {
    for (int d : {1, 2, 3}) {
        for (double alpha : {0.7, 1.0, 1.5}) {
            // Substituting r = e^u; the tail beyond R uses the leading even-κ asymptote.
            const double R = 1e5;
            double mass = 0.0;
            for (double a = std::log(1e-8); a < std::log(R); a += 1.0) {
                const double b = std::min(a + 1.0, std::log(R));
                mass += quad::integrate_adaptive<double>(
                            [&](double u) {
                                const double r = std::exp(u);
                                return std::pow(r, d) * eval_D(d, alpha, KappaOrder(0), r, 1e-11).value;
                            },
                            a, b, 1e-13, 1e-11)
                            .value;
            }
            const double tail = const_D_even(d, alpha, KappaOrder(0)).value * std::pow(R, -alpha) / alpha;
            CAPTURE(d);
            CAPTURE(alpha);
            CHECK(std::fabs(surface(d) * (mass + tail) - 1.0) <= 1e-4);
        }
    }
}

TEST_CASE("frac_laplacian_g: examples and scaling") {
    const std::array<double, 1> o{0.0};
    const StableParams cauchy{1, 1.0, 1.0};
    CHECK(rel(frac_laplacian_g(cauchy, KappaOrder(2), 1.0, o, o).value, 2.0 / pi) <= 1e-12);

    const StableParams p{2, 1.3, 0.7};
    const std::array<double, 2> x{0.4, 1.1};
    const std::array<double, 2> y{-0.2, 0.3};
    CHECK(rel(frac_laplacian_g(p, KappaOrder(0), 0.8, x, y).value, eval_density(p, 0.8, x, y)) <= 1e-12);

    const std::array<double, 2> x0{0.6, 0.8};
    const std::array<double, 2> y0{0.0, 0.0};
    const StableParams unit{2, 1.3, 1.0};
    CHECK(rel(frac_laplacian_g(unit, KappaOrder(1, 2), 1.0, x0, y0).value,
              eval_D(2, 1.3, KappaOrder(1, 2), 1.0).value) <= 1e-12);

    for (double t : {0.05, 1.0, 20.0}) {
        const double ct = p.c * t;
        const double dist = std::hypot(x[0] - y[0], x[1] - y[1]);
        const double expected = std::pow(ct, -(2.0 + 0.5) / 1.3) *
                                eval_D(2, 1.3, KappaOrder(1, 2), std::pow(ct, -1.0 / 1.3) * dist).value;
        CHECK(rel(frac_laplacian_g(p, KappaOrder(1, 2), t, x, y).value, expected) <= 1e-12);
    }
}

TEST_CASE("frac_gradient_g: examples") {
    const StableParams cauchy{1, 1.0, 1.0};
    const std::array<double, 1> x{1.0};
    const std::array<double, 1> o{0.0};
    const auto grad = frac_gradient_g(cauchy, KappaOrder(1), 1.0, x, o, 1e-10);
    CHECK(rel(grad[0].imag(), 1.0 / (2.0 * pi)) <= 1e-9);
    // i·∇_1 g equals the ordinary gradient: g'(1) = -2x/(π(1+x²)²) = -1/(2π).
    CHECK(rel((std::complex<double>(0.0, 1.0) * grad[0]).real(), -1.0 / (2.0 * pi)) <= 1e-9);

    const StableParams p{3, 0.9, 1.4};
    const std::array<double, 3> a{0.5, -0.5, 2.0};
    for (const auto& v : frac_gradient_g(p, KappaOrder(1, 3), 0.7, a, a)) CHECK(v == std::complex<double>(0.0, 0.0));

    const std::array<double, 3> b{0.1, 0.2, 0.3};
    const auto g = frac_gradient_g(p, KappaOrder(1, 3), 0.7, a, b);
    for (int i = 0; i < 3; ++i) CHECK(g[i].real() == 0.0);
    CHECK(std::fabs(g[1].imag() / (a[1] - b[1]) - g[2].imag() / (a[2] - b[2])) <=
          1e-12 * std::fabs(g[2].imag() / (a[2] - b[2])));
}

TEST_CASE("gradient_identity_residual: examples") {
    const std::array<double, 1> x1{1.0};
    const std::array<double, 3> x3{1.0, 1.0, 1.0};
    const std::array<double, 2> x2{0.0, 2.0};
    CHECK(gradient_identity_residual(1, 1.0, KappaOrder(1), x1, 1e-10) <= 1e-8);
    CHECK(gradient_identity_residual(3, 1.5, KappaOrder(1, 2), x3, 1e-10) <= 1e-8);
    CHECK(gradient_identity_residual(2, 0.8, KappaOrder(3, 2), x2, 1e-10) <= 1e-8);
    const std::array<double, 2> zero{0.0, 0.0};
    CHECK_THROWS_AS(gradient_identity_residual(2, 0.8, KappaOrder(3, 2), zero), DomainError);
}

TEST_CASE("N agrees with a finite-difference gradient of D") {
    // N(κ,x) = -i ∇D(κ-1,·)(x), so the profile n equals -dD(κ-1)/dr.
    for (int d : {1, 2, 3}) {
        for (double kappa : {0.5, 1.0, 1.75}) {
            const double r = 1.7;
            const double h = 1e-4;
            const double fd = -(eval_D_real(d, 1.2, kappa - 1.0, r + h, 1e-12).value -
                                eval_D_real(d, 1.2, kappa - 1.0, r - h, 1e-12).value) /
                              (2.0 * h);
            CHECK(std::fabs(eval_N_radial(d, 1.2, kappa, r, 1e-11).value - fd) <= 1e-7);
        }
    }
}

TEST_CASE("PDE residual: dg/dt + c Δ_α g = 0") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_t(std::log(0.1), std::log(10.0));
    std::uniform_real_distribution<double> log_r(std::log(0.05), std::log(20.0));
    for (int d : {1, 2, 3}) {
        for (double alpha : {0.7, 1.0, 1.5}) {
            const StableParams p{d, alpha, 0.8};
            for (int k = 0; k < 4; ++k) {
                const double t = std::exp(log_t(rng));
                const double r = std::exp(log_r(rng));
                const double h = 1e-5 * t;
                const double dgdt = (eval_density_radial(p, t + h, r, 1e-12).value -
                                     eval_density_radial(p, t - h, r, 1e-12).value) /
                                    (2.0 * h);
                std::vector<double> xd(d, 0.0), yd(d, 0.0);
                xd[0] = r;
                const double lap = frac_laplacian_g(p, exact(alpha), t, xd, yd, 1e-12).value;
                CAPTURE(d);
                CAPTURE(alpha);
                CAPTURE(t);
                CAPTURE(r);
                CHECK(std::fabs(dgdt + p.c * lap) <= 1e-5 * std::fabs(dgdt));
            }
        }
    }
}

TEST_CASE("tiny radii: the origin series matches the Hankel route and stays finite") {
    for (int d : {1, 2, 3}) {
        for (double alpha : {0.5, 1.0, 1.9}) {
            for (double kappa : {-0.5, 0.0, 1.0, 2.5}) {
                for (double r : {1e-4, 1e-3, 3e-3}) {
                    const double hankel = std::pow(2.0 * pi, -d / 2.0) * std::pow(r, -d - kappa) *
                                          eval_I(radial_integrand(d, kappa, alpha, r), 1e-12).value;
                    CAPTURE(d);
                    CAPTURE(alpha);
                    CAPTURE(kappa);
                    CAPTURE(r);
                    CHECK(rel(eval_D_real(d, alpha, kappa, r, 1e-12).value, hankel) <= 1e-9);
                    if (kappa > 1.0 - d) {
                        const double n_hankel = std::pow(2.0 * pi, -d / 2.0) * std::pow(r, -d - kappa) *
                                                eval_I(radial_integrand(d + 2, kappa - 1.0, alpha, r), 1e-12).value;
                        CHECK(rel(eval_N_radial(d, alpha, kappa, r, 1e-12).value, n_hankel) <= 1e-9);
                    }
                }
                for (double r : {1e-300, 1e-189, 1e-30, 1e-8}) {
                    const double v = eval_D_real(d, alpha, kappa, r).value;
                    CHECK(std::isfinite(v));
                    CHECK(rel(v, eval_D_origin(d, alpha, kappa)) <= 1e-6);
                    if (kappa > 1.0 - d) CHECK(std::isfinite(eval_N_radial(d, alpha, kappa, r).value));
                }
            }
        }
    }
}
