#include "doctest.h"

#include <cmath>
#include <numbers>

#include "stablekernel/asymptotics.hpp"
#include "stablekernel/errors.hpp"
#include "stablekernel/kernels.hpp"
#include "stablekernel/quadrature.hpp"
#include "stablekernel/special_functions.hpp"

using namespace stablekernel;
using std::numbers::pi;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// ∫_0^∞ t^ν K_μ(t) dt on log-spaced panels.
double k_moment_quadrature(double nu, double mu) {
    double total = 0.0;
    for (double a = 1e-12; a < 60.0; a *= 2.0) {
        total += quad::integrate_adaptive<double>(
                     [&](double t) { return std::pow(t, nu) * bessel_k(BesselOrder(mu), t); }, a, std::min(2.0 * a, 60.0),
                     1e-16, 1e-13)
                     .value;
    }
    return total;
}
}  // namespace

TEST_CASE("lemma1_limit: examples and zero structure") {
    CHECK(lemma1_limit(1.0, -0.5) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(lemma1_limit(0.5, -0.5) == 0.0);
    CHECK(lemma1_limit(1.5, 0.5) == 0.0);
    CHECK(lemma1_limit(3.5, 0.5) == 0.0);
    CHECK(lemma1_limit(1.25, 0.5) != 0.0);
    CHECK_THROWS_AS(lemma1_limit(-0.6, 0.5), DomainError);
}

TEST_CASE("k_bessel_moment: prefactor 2^{ν-1} confirmed by quadrature") {
    CHECK(k_bessel_moment(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k_bessel_moment(0.5, 0.5) == doctest::Approx(std::sqrt(pi / 2.0)).epsilon(1e-14));
    CHECK(k_bessel_moment(2.0, 0.0) == doctest::Approx(pi / 2.0).epsilon(1e-14));
    CHECK(rel(k_moment_quadrature(1.0, 0.0), 1.0) <= 1e-10);
    CHECK(rel(k_moment_quadrature(2.0, 0.0), pi / 2.0) <= 1e-10);
    CHECK(rel(k_moment_quadrature(1.7, 0.3), k_bessel_moment(1.7, 0.3)) <= 1e-10);
    CHECK_THROWS_AS(k_bessel_moment(0.5, 2.0), DomainError);
}

TEST_CASE("const_D: generic branch") {
    const auto c = const_D(1, 1.0, KappaOrder(1, 2));
    CHECK(c.branch == Branch::generic_D);
    CHECK(c.decay_exponent == doctest::Approx(1.5));
    CHECK(c.value < 0.0);
    const double closed = std::sqrt(2.0) / std::pow(pi, 1.5) * stablekernel::gamma(0.75) * stablekernel::gamma(1.25) *
                          std::cos(0.75 * pi);
    CHECK(rel(c.value, closed) <= 1e-14);
    const double numeric = eval_D(1, 1.0, KappaOrder(1, 2), 200.0, 1e-10).value * std::pow(200.0, 1.5);
    CHECK(rel(numeric, c.value) <= 0.02);
    CHECK_THROWS_AS(const_D(1, 1.0, KappaOrder(0)), ParityError);
    CHECK_THROWS_AS(const_D(1, 1.0, KappaOrder(-1)), DomainError);
    CHECK_THROWS_AS(const_D(3, 1.0, KappaOrder(-5, 2)), DomainError);
}

TEST_CASE("const_D_even: oracle-confirmed values") {
    const auto c0 = const_D_even(1, 1.0, KappaOrder(0));
    CHECK(c0.branch == Branch::even_D);
    CHECK(c0.decay_exponent == doctest::Approx(2.0));
    CHECK(c0.value == doctest::Approx(1.0 / pi).epsilon(1e-14));
    // Cauchy: D(2,x) = -g''(x) = (2 - 6x²)/(π(1+x²)³), so the tail constant is -6/π.
    const auto c2 = const_D_even(1, 1.0, KappaOrder(2));
    CHECK(c2.value == doctest::Approx(-6.0 / pi).epsilon(1e-14));
    for (double r : {50.0, 100.0, 200.0, 400.0}) {
        const double exact = (2.0 - 6.0 * r * r) / (pi * std::pow(1.0 + r * r, 3));
        CHECK(rel(eval_D(1, 1.0, KappaOrder(2), r, 1e-10).value, exact) <= 1e-7);
    }
    CHECK(rel(eval_D(1, 1.0, KappaOrder(2), 400.0, 1e-10).value * std::pow(400.0, 4), c2.value) <= 1e-4);
    CHECK_THROWS_AS(const_D_even(1, 1.0, KappaOrder(1, 2)), ParityError);
    CHECK_THROWS_AS(const_D_even(1, 1.0, KappaOrder(1)), ParityError);
    CHECK_THROWS_AS(const_D_even(1, 1.0, KappaOrder(-2)), ParityError);
}

TEST_CASE("const_N: generic branch") {
    const auto c = const_N(1, 1.0, KappaOrder(1, 2));
    CHECK(c.branch == Branch::generic_N);
    CHECK(c.decay_exponent == doctest::Approx(2.5));
    const double coefficient = std::sqrt(2.0) / std::pow(pi, 1.5) * stablekernel::gamma(0.75) *
                               stablekernel::gamma(1.25) * std::cos(0.25 * pi);
    CHECK(rel(-c.value, coefficient) <= 1e-14);
    // (N(κ,x),e1) ~ -i N_κ x/|x|^{d+κ+1}: the radial profile n satisfies n r^{d+κ} -> -N_κ.
    const double numeric = eval_N_radial(1, 1.0, 0.5, 200.0, 1e-10).value * std::pow(200.0, 1.5);
    CHECK(rel(numeric, -c.value) <= 0.02);
    const auto c0 = const_N(3, 1.2, KappaOrder(0));
    CHECK(rel(eval_N_radial(3, 1.2, 0.0, 200.0, 1e-10).value * std::pow(200.0, 3.0), -c0.value) <= 0.02);
    CHECK_THROWS_AS(const_N(1, 1.0, KappaOrder(1)), ParityError);
    CHECK_THROWS_AS(const_N(1, 1.0, KappaOrder(0)), DomainError);
}

TEST_CASE("const_N_odd: oracle-confirmed values") {
    const auto c = const_N_odd(1, 1.0, KappaOrder(1));
    CHECK(c.branch == Branch::odd_N);
    CHECK(c.decay_exponent == doctest::Approx(4.0));
    // Cauchy: N(1,x) = -i g'(x) = 2ix/(π(1+x²)²) ~ 2i/(π x³), so N_{1,1} = -2/π.
    CHECK(c.value == doctest::Approx(-2.0 / pi).epsilon(1e-14));
    CHECK(rel(eval_N_radial(1, 1.0, 1.0, 400.0, 1e-10).value * std::pow(400.0, 3), -c.value) <= 1e-4);
    CHECK(const_N_odd(3, 1.0, KappaOrder(1)).value < 0.0);
    CHECK_THROWS_AS(const_N_odd(1, 1.0, KappaOrder(2)), ParityError);
    CHECK_THROWS_AS(const_N_odd(1, 1.0, KappaOrder(1, 2)), ParityError);
}

TEST_CASE("tail dispatch") {
    CHECK(tail_constant_D(1, 1.0, KappaOrder(2)).branch == Branch::even_D);
    CHECK(tail_constant_D(1, 1.0, KappaOrder(1)).branch == Branch::generic_D);
    CHECK(tail_constant_N(2, 1.0, KappaOrder(3)).branch == Branch::odd_N);
    CHECK(tail_constant_N(2, 1.0, KappaOrder(2)).branch == Branch::generic_N);
    CHECK(rel(tail_D(1, 1.0, KappaOrder(0), 100.0), 1.0 / (pi * 1e4)) <= 1e-14);
    CHECK(to_string(Branch::odd_N) == "odd_N");
}

TEST_CASE("branch exclusivity over sampled exact rationals") {
    for (int d : {1, 2, 3, 4}) {
        for (int den : {1, 2, 3, 7}) {
            for (int num = -4 * den; num <= 5 * den; ++num) {
                const KappaOrder k(num, den);
                const double lower_D = -std::min(d, 2);
                if (k.value() > lower_D) {
                    int ok = 0;
                    try { const_D(d, 1.3, k); ++ok; } catch (const DomainError&) {}
                    try { const_D_even(d, 1.3, k); ++ok; } catch (const DomainError&) {}
                    CHECK(ok == 1);
                }
                if (k.value() > 1.0 - std::min(d, 2)) {
                    int ok = 0;
                    try { const_N(d, 1.3, k); ++ok; } catch (const DomainError&) {}
                    try { const_N_odd(d, 1.3, k); ++ok; } catch (const DomainError&) {}
                    CHECK(ok == 1);
                }
            }
        }
    }
}

TEST_CASE("const_D agrees with the scaled lemma limit") {
    for (int d : {1, 2, 3, 5}) {
        for (const KappaOrder k : {KappaOrder(1, 2), KappaOrder(1), KappaOrder(3, 2), KappaOrder(7, 3), KappaOrder(3)}) {
            const double expected = std::pow(2.0 * pi, -d / 2.0) * lemma1_limit(d / 2.0 + k.value(), d / 2.0 - 1.0);
            const double value = const_D(d, 1.1, k).value;
            if (expected == 0.0) {
                CHECK(value == 0.0);
            } else {
                CHECK(rel(value, expected) <= 1e-13);
            }
        }
    }
}

TEST_CASE("tail ratios improve with radius") {
    for (int d : {1, 2, 3}) {
        for (const KappaOrder k : {KappaOrder(1, 2), KappaOrder(3, 2)}) {
            const auto c = tail_constant_D(d, 1.0, k);
            auto ratio = [&](double r) {
                return eval_D(d, 1.0, k, r, 1e-10).value * std::pow(r, c.decay_exponent) / c.value;
            };
            CHECK(std::fabs(ratio(200.0) - 1.0) < std::fabs(ratio(50.0) - 1.0));
        }
    }
}
