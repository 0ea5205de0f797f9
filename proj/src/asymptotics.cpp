#include "stablekernel/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stablekernel/errors.hpp"
#include "stablekernel/special_functions.hpp"

namespace stablekernel {

namespace {

constexpr double kPi = std::numbers::pi;

void check_common(int d, double alpha) {
    if (d < 1) throw DomainError("dimension must be >= 1");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("alpha must lie in (0, 2)");
}

void check_lemma_domain(double nu, double mu) {
    if (!(nu > std::fabs(mu) - 1.0)) {
        throw DomainError("requires nu > |mu| - 1 (nu = " + std::to_string(nu) + ", mu = " + std::to_string(mu) + ")");
    }
}

// (2π)^{-d/2} times the Lemma 1 limit, assembled in logs; `shift` = ν - μ is passed separately
// so that the cosine sees an exactly representable argument.
double scaled_limit(int d, double nu, double mu, double shift) {
    const double c = cos_pi(0.5 * shift);
    if (c == 0.0) return 0.0;
    const double log_mag = nu * std::log(2.0) - std::log(kPi) + log_gamma(0.5 * (shift + 1.0)) +
                           log_gamma(0.5 * (nu + mu + 1.0)) - 0.5 * d * std::log(2.0 * kPi);
    return std::exp(log_mag) * c;
}

int min_d2(int d) { return d < 2 ? d : 2; }

}  // namespace

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::generic_D: return "generic_D";
        case Branch::even_D: return "even_D";
        case Branch::generic_N: return "generic_N";
        case Branch::odd_N: return "odd_N";
        case Branch::lemma1: return "lemma1";
    }
    return "unknown";
}

double lemma1_limit(double nu, double mu) {
    check_lemma_domain(nu, mu);
    const double c = cos_pi(0.5 * (nu - mu));
    if (c == 0.0) return 0.0;
    const double log_mag =
        nu * std::log(2.0) - std::log(kPi) + log_gamma(0.5 * (nu - mu + 1.0)) + log_gamma(0.5 * (nu + mu + 1.0));
    return std::exp(log_mag) * c;
}

double k_bessel_moment(double nu, double mu) {
    check_lemma_domain(nu, mu);
    return std::exp((nu - 1.0) * std::log(2.0) + log_gamma(0.5 * (nu - mu + 1.0)) + log_gamma(0.5 * (nu + mu + 1.0)));
}

AsymptoticConstant const_D(int d, double alpha, const KappaOrder& kappa) {
    check_common(d, alpha);
    if (!(kappa > KappaOrder(-min_d2(d)))) throw DomainError("const_D: needs kappa > -(d ∧ 2)");
    if (kappa.is_even_integer()) {
        throw ParityError("const_D: kappa = " + kappa.to_string() + " is an even integer; use const_D_even");
    }
    const double k = kappa.value();
    // (2π)^{-d/2} · lemma1_limit(d/2 + κ, d/2 - 1), where ν - μ = κ + 1.
    const double v = scaled_limit(d, 0.5 * d + k, 0.5 * d - 1.0, (kappa + KappaOrder(1)).value());
    return {v, Branch::generic_D, d + k};
}

AsymptoticConstant const_D_even(int d, double alpha, const KappaOrder& kappa) {
    check_common(d, alpha);
    if (!kappa.is_even_integer() || kappa < KappaOrder(0)) {
        throw ParityError("const_D_even: kappa = " + kappa.to_string() + " is not an even integer >= 0");
    }
    const double k = kappa.value();
    // The leading moment vanishes; the next term of the large-r expansion of I(d,κ,r) is
    // -r^{-α} times the limit at ν + α, which carries the factor (α+κ).
    const double v = -scaled_limit(d, 0.5 * d + k + alpha, 0.5 * d - 1.0, k + alpha + 1.0);
    return {v, Branch::even_D, d + alpha + k};
}

AsymptoticConstant const_N(int d, double alpha, const KappaOrder& kappa) {
    check_common(d, alpha);
    if (!(kappa > KappaOrder(1 - min_d2(d)))) throw DomainError("const_N: needs kappa > 1 - (d ∧ 2)");
    if (kappa.is_odd_integer()) {
        throw ParityError("const_N: kappa = " + kappa.to_string() + " is an odd integer; use const_N_odd");
    }
    const double k = kappa.value();
    // n(κ,r) = (2π)^{-d/2} r^{-d-κ} I(d+2, κ-1, r) with ν = d/2 + κ, μ = d/2, ν - μ = κ.
    const double v = -scaled_limit(d, 0.5 * d + k, 0.5 * d, kappa.value());
    return {v, Branch::generic_N, d + k + 1.0};
}

AsymptoticConstant const_N_odd(int d, double alpha, const KappaOrder& kappa) {
    check_common(d, alpha);
    if (!kappa.is_odd_integer() || kappa < KappaOrder(1)) {
        throw ParityError("const_N_odd: kappa = " + kappa.to_string() + " is not an odd integer >= 1");
    }
    const double k = kappa.value();
    const double v = scaled_limit(d, 0.5 * d + k + alpha, 0.5 * d, k + alpha);
    return {v, Branch::odd_N, d + alpha + k + 1.0};
}

AsymptoticConstant tail_constant_D(int d, double alpha, const KappaOrder& kappa) {
    return kappa.is_even_integer() && kappa >= KappaOrder(0) ? const_D_even(d, alpha, kappa)
                                                              : const_D(d, alpha, kappa);
}

AsymptoticConstant tail_constant_N(int d, double alpha, const KappaOrder& kappa) {
    return kappa.is_odd_integer() && kappa >= KappaOrder(1) ? const_N_odd(d, alpha, kappa)
                                                             : const_N(d, alpha, kappa);
}

double tail_D(int d, double alpha, const KappaOrder& kappa, double radius) {
    if (!(radius > 0.0)) throw DomainError("tail_D: radius must be positive");
    const AsymptoticConstant c = tail_constant_D(d, alpha, kappa);
    return c.value * std::pow(radius, -c.decay_exponent);
}

double tail_N(int d, double alpha, const KappaOrder& kappa, double radius) {
    if (!(radius > 0.0)) throw DomainError("tail_N: radius must be positive");
    const AsymptoticConstant c = tail_constant_N(d, alpha, kappa);
    // (N, ν) ~ -i C (x, ν)/|x|^{decay}: radial profile -C |x|^{1-decay}.
    return -c.value * std::pow(radius, 1.0 - c.decay_exponent);
}

}  // namespace stablekernel
