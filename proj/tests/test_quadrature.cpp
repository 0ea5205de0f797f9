#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "stablekernel/quadrature.hpp"

using namespace stablekernel::quad;
using std::numbers::pi;

TEST_CASE("gauss_kronrod_21: exact for polynomials of moderate degree") {
    for (int k = 0; k <= 29; ++k) {
        const auto est = gauss_kronrod_21<double>([k](double x) { return std::pow(x, k); }, 0.0, 2.0);
        const double exact = std::pow(2.0, k + 1) / (k + 1);
        CHECK(std::fabs(est.value - exact) <= 1e-14 * exact);
        CHECK(est.evals == 21);
    }
}

TEST_CASE("gauss_kronrod_21: complex integrand") {
    const auto est =
        gauss_kronrod_21<std::complex<double>>([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, pi);
    CHECK(std::abs(est.value - std::complex<double>(0.0, 2.0)) <= 1e-14);
}

TEST_CASE("integrate_adaptive: smooth and peaked integrands") {
    const auto a = integrate_adaptive<double>([](double x) { return std::exp(-x) * std::cos(20.0 * x); }, 0.0, 10.0,
                                              1e-14, 1e-13);
    const double exact = (1.0 - std::exp(-10.0) * (std::cos(200.0) - 20.0 * std::sin(200.0))) / 401.0;
    CHECK(std::fabs(a.value - exact) <= 1e-13);
    CHECK(a.error <= 1e-12);

    const auto b = integrate_adaptive<double>([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, 1e-12, 1e-12);
    CHECK(std::fabs(b.value - 2.0 * std::atan(100.0) * 100.0) <= 1e-9);
}

TEST_CASE("integrate_adaptive: budget exhaustion returns the best estimate with a large error") {
    const auto est = integrate_adaptive<double>([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, 1e-15, 1e-15, 4);
    CHECK(est.error > 1e-15);
    CHECK(std::isfinite(est.value));
}

TEST_CASE("integrate_tanh_sinh: endpoint singularities") {
    // ∫_0^1 x^{-1/2} dx = 2, using the distance argument near the singular end.
    const auto a = integrate_tanh_sinh<double>([](double, double dist) { return 1.0 / std::sqrt(dist); }, 0.0, 1.0, 1e-14);
    CHECK(std::fabs(a.value - 2.0) <= 1e-12);
    // ∫_0^1 log(x) dx = -1.
    const auto b = integrate_tanh_sinh<double>([](double x, double) { return std::log(x); }, 0.0, 1.0, 1e-14);
    CHECK(std::fabs(b.value + 1.0) <= 1e-12);
    CHECK(b.evals > 0);
}

TEST_CASE("WynnEpsilon: accelerates alternating series") {
    // ln 2 = 1 - 1/2 + 1/3 - ...
    WynnEpsilon wynn;
    double partial = 0.0;
    for (int k = 1; k <= 20; ++k) {
        partial += (k % 2 == 1 ? 1.0 : -1.0) / k;
        wynn.push(partial);
    }
    CHECK(std::fabs(partial - std::log(2.0)) > 1e-2);
    CHECK(std::fabs(wynn.estimate() - std::log(2.0)) <= 1e-12);
    CHECK(wynn.count() == 20);
    CHECK(wynn.change() <= 1e-10);

    wynn.reset();
    CHECK(wynn.count() == 0);
    CHECK(std::isinf(wynn.change()));
}

TEST_CASE("WynnEpsilon: exact for geometric series") {
    WynnEpsilon wynn;
    double partial = 0.0;
    double term = 1.0;
    for (int k = 0; k < 4; ++k) {
        partial += term;
        term *= -0.9;
        wynn.push(partial);
    }
    CHECK(std::fabs(wynn.estimate() - 1.0 / 1.9) <= 1e-13);
}
