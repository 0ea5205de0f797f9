#include "stablekernel/kernels.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "stablekernel/errors.hpp"
#include "stablekernel/special_functions.hpp"

namespace stablekernel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dimension(int d) {
    if (d < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(d));
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("alpha must lie in (0, 2), got " + std::to_string(alpha));
}

double distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("points must have the same dimension");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

double norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

// (2π)^{-d/2} r^{-d-κ} as an exponent, so tiny radii do not overflow before meeting I.
double radial_prefactor(int d, double kappa, double r) {
    return std::exp(-0.5 * d * std::log(kTwoPi) - (d + kappa) * std::log(r));
}

}  // namespace

void StableParams::validate() const {
    check_dimension(d);
    check_alpha(alpha);
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("diffusivity c must be positive");
}

double eval_D_origin(int d, double alpha, double kappa) {
    check_dimension(d);
    check_alpha(alpha);
    if (!(kappa > -d)) throw DomainError("D(kappa, x) needs kappa > -d");
    // (2π)^{-d} · 2π^{d/2}/Γ(d/2) · Γ((κ+d)/α)/α
    const double log_value = -d * std::log(kTwoPi) + std::log(2.0) + 0.5 * d * std::log(std::numbers::pi) -
                             log_gamma(0.5 * d) + log_gamma((kappa + d) / alpha) - std::log(alpha);
    return std::exp(log_value);
}

namespace {

// Near the origin the cosine series gives
// D(κ, r) = Σ_k (-1)^k r^{2k} D(κ+2k, 0) / (2^k k! d(d+2)...(d+2k-2)).
// Used only when the first omitted term is below rounding, which is where r^{-d-κ} I(r)
// would otherwise underflow or overflow.
std::optional<double> small_radius_series(int d, double alpha, double kappa, double radius, bool derivative) {
    constexpr int kTerms = 4;
    double coefficient = 1.0;  // 1 / (2^k k! Π_{j<k} (d+2j))
    double sum = 0.0;
    for (int k = 0; k <= kTerms; ++k) {
        if (k > 0) coefficient /= 2.0 * k * (d + 2.0 * (k - 1));
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        // -d/dr of the D(κ-1) series, i.e. the radial profile n(κ, r).
        const double term = derivative ? (k == 0 ? 0.0
                                                 : -sign * 2.0 * k * std::pow(radius, 2 * k - 1) * coefficient *
                                                       eval_D_origin(d, alpha, kappa - 1.0 + 2.0 * k))
                                       : sign * std::pow(radius, 2 * k) * coefficient *
                                             eval_D_origin(d, alpha, kappa + 2.0 * k);
        if (k == kTerms) {
            if (std::fabs(term) <= 1e-17 * std::fabs(sum)) return sum;
            return std::nullopt;
        }
        sum += term;
    }
    return std::nullopt;
}

}  // namespace

KernelValue eval_D_real(int d, double alpha, double kappa, double radius, double tol, const DispatchConfig& config) {
    check_dimension(d);
    check_alpha(alpha);
    if (!(kappa > -d)) throw DomainError("D(kappa, x) needs kappa > -d, got kappa = " + std::to_string(kappa));
    if (!(radius >= 0.0) || !std::isfinite(radius)) throw DomainError("radius must be finite and >= 0");
    if (radius == 0.0) return {eval_D_origin(d, alpha, kappa), 0.0, Strategy::closed_form, 0};
    if (const auto series = small_radius_series(d, alpha, kappa, radius, false)) {
        return {*series, 1e-16 * std::fabs(*series), Strategy::closed_form, 0};
    }
    const QuadResult q = eval_I(radial_integrand(d, kappa, alpha, radius), tol, config);
    const double scale = radial_prefactor(d, kappa, radius);
    return {scale * q.value, scale * q.err_estimate, q.strategy, q.evals};
}

KernelValue eval_D(int d, double alpha, const KappaOrder& kappa, double radius, double tol,
                   const DispatchConfig& config) {
    return eval_D_real(d, alpha, kappa.value(), radius, tol, config);
}

KernelValue eval_N_radial(int d, double alpha, double kappa, double radius, double tol, const DispatchConfig& config) {
    check_dimension(d);
    check_alpha(alpha);
    if (!(kappa > 1.0 - d)) throw DomainError("N(kappa, x) needs kappa > 1 - d, got kappa = " + std::to_string(kappa));
    if (!(radius >= 0.0) || !std::isfinite(radius)) throw DomainError("radius must be finite and >= 0");
    if (radius == 0.0) return {0.0, 0.0, Strategy::closed_form, 0};
    if (const auto series = small_radius_series(d, alpha, kappa, radius, true)) {
        return {*series, 1e-16 * std::fabs(*series), Strategy::closed_form, 0};
    }
    // Differentiating the Bochner representation of D(κ-1) raises both the dimension and the
    // Bessel order by one step: n(κ, r) = (2π)^{-d/2} r^{-d-κ} I(d+2, κ-1, r).
    const QuadResult q = eval_I(radial_integrand(d + 2, kappa - 1.0, alpha, radius), tol, config);
    const double scale = radial_prefactor(d, kappa, radius);
    return {scale * q.value, scale * q.err_estimate, q.strategy, q.evals};
}

std::vector<std::complex<double>> eval_N(int d, double alpha, const KappaOrder& kappa, std::span<const double> x,
                                         double tol, const DispatchConfig& config) {
    if (static_cast<int>(x.size()) != d) throw DomainError("point has the wrong number of coordinates");
    const double r = norm(x);
    const double n = eval_N_radial(d, alpha, kappa.value(), r, tol, config).value;
    std::vector<std::complex<double>> out(x.size());
    if (r == 0.0) return out;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = {0.0, n * x[i] / r};
    return out;
}

KernelValue eval_density_radial(const StableParams& params, double t, double radius, double tol) {
    return frac_laplacian_g_radial(params, 0.0, t, radius, tol);
}

double eval_density(const StableParams& params, double t, std::span<const double> x, std::span<const double> y,
                    double tol) {
    if (static_cast<int>(x.size()) != params.d) throw DomainError("point has the wrong number of coordinates");
    return eval_density_radial(params, t, distance(x, y), tol).value;
}

KernelValue frac_laplacian_g_radial(const StableParams& params, double kappa, double t, double radius, double tol) {
    params.validate();
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("time t must be positive");
    const double scale = params.c * t;
    KernelValue v = eval_D_real(params.d, params.alpha, kappa, radius * std::pow(scale, -1.0 / params.alpha), tol);
    const double factor = std::pow(scale, -(params.d + kappa) / params.alpha);
    v.value *= factor;
    v.err_estimate *= factor;
    return v;
}

KernelValue frac_laplacian_g(const StableParams& params, const KappaOrder& kappa, double t, std::span<const double> x,
                             std::span<const double> y, double tol) {
    if (static_cast<int>(x.size()) != params.d) throw DomainError("point has the wrong number of coordinates");
    return frac_laplacian_g_radial(params, kappa.value(), t, distance(x, y), tol);
}

KernelValue frac_gradient_g_radial(const StableParams& params, double kappa, double t, double radius, double tol) {
    params.validate();
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("time t must be positive");
    const double scale = params.c * t;
    KernelValue v = eval_N_radial(params.d, params.alpha, kappa, radius * std::pow(scale, -1.0 / params.alpha), tol);
    const double factor = std::pow(scale, -(params.d + kappa) / params.alpha);
    v.value *= factor;
    v.err_estimate *= factor;
    return v;
}

std::vector<std::complex<double>> frac_gradient_g(const StableParams& params, const KappaOrder& kappa, double t,
                                                  std::span<const double> x, std::span<const double> y, double tol) {
    if (static_cast<int>(x.size()) != params.d) throw DomainError("point has the wrong number of coordinates");
    const double r = distance(x, y);
    const double n = frac_gradient_g_radial(params, kappa.value(), t, r, tol).value;
    std::vector<std::complex<double>> out(x.size());
    if (r == 0.0) return out;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = {0.0, n * (x[i] - y[i]) / r};
    return out;
}

double gradient_identity_residual(int d, double alpha, const KappaOrder& kappa, std::span<const double> x,
                                  double tol) {
    if (static_cast<int>(x.size()) != d) throw DomainError("point has the wrong number of coordinates");
    const double r = norm(x);
    if (r == 0.0) throw DomainError("gradient identity is stated for x != 0");
    const double k = kappa.value();
    const auto lhs = eval_N(d, alpha, kappa, x, tol);
    const double bracket = alpha * eval_D_real(d, alpha, alpha + k - 1.0, r, tol).value -
                           (d + k - 1.0) * eval_D_real(d, alpha, k - 1.0, r, tol).value;
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::complex<double> rhs{0.0, -x[i] / (r * r) * bracket};
        worst = std::max(worst, std::abs(lhs[i] - rhs));
    }
    return worst;
}

}  // namespace stablekernel
