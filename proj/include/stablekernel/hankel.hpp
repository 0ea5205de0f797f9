#pragma once

#include <string_view>

#include "stablekernel/special_functions.hpp"

namespace stablekernel {

/// How a radial integral was evaluated.
enum class Strategy {
    small_r_direct,      ///< real-axis panels, envelope decays before acceleration pays off
    direct_accelerated,  ///< real-axis panels between Bessel zeros + Wynn epsilon on the tail
    contour,             ///< rotated ray with the elementary K_μ (odd dimension)
    tail_series,         ///< large-r expansion in powers of r^{-α}
    closed_form,         ///< exact expression (origin values, symmetry zeros)
};

std::string_view to_string(Strategy s);

/// ∫_0^∞ t^ν exp(-(t/r)^α) J_μ(t) dt.
struct HankelIntegrand {
    double nu;
    double mu;
    double alpha;
    double r;

    /// Validates μ >= -1/2, α in (0,2), r > 0 and ν + μ > -1 (integrability at the origin).
    void validate() const;
    /// ν > |μ| - 1, the condition under which the r -> ∞ limit exists.
    bool has_finite_limit() const noexcept;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    Strategy strategy = Strategy::direct_accelerated;
    long evals = 0;
};

struct DirectOptions {
    long max_evals = 4'000'000;
    int wynn_window = 30;  ///< panels fed to one epsilon table before it is restarted
};

struct DispatchConfig {
    double r_small = 1.0;
    double r_osc = 10.0;
    double r_series = 200.0;
    DirectOptions direct{};
};

/// Real-axis evaluation: panels between consecutive zeros of J_μ, summed directly while the
/// envelope still grows and accelerated with Wynn's epsilon algorithm afterwards.
QuadResult eval_I_direct(const HankelIntegrand& integrand, double tol, const DirectOptions& options = {});

/// Admissible open interval for the ray angle β of the rotated contour.
struct BetaInterval {
    double lower;
    double upper;
    double midpoint() const noexcept { return 0.5 * (lower + upper); }
};
BetaInterval admissible_beta(double alpha);

/// Rotated-ray evaluation, valid for half-integer μ and ν > |μ| - 1:
/// I = (2/π) Re( e^{i(ν-μ)π/2} ∫_0^∞ w^ν exp(-(w/r)^α e^{iαπ/2}) K_μ(w) dw ),  w = s e^{iβ}.
QuadResult eval_I_contour(const HankelIntegrand& integrand, double beta, double tol);
QuadResult eval_I_contour(const HankelIntegrand& integrand, double tol);

/// Large-r expansion Σ_k (-1)^k/k! r^{-αk} M(ν+αk, μ) with the regularised Hankel moment M.
/// Convergent for α < 1, asymptotic otherwise; stops at the smallest term.
QuadResult eval_I_tail_series(const HankelIntegrand& integrand, double tol);

/// Regularised Hankel moment 2^ν Γ((ν+μ+1)/2) / Γ((μ-ν+1)/2); equals the r -> ∞ limit when ν > |μ| - 1.
double hankel_moment(double nu, double mu);

/// Strategy dispatcher.
QuadResult eval_I(const HankelIntegrand& integrand, double tol, const DispatchConfig& config = {});

/// Strategy eval_I would pick, without evaluating.
Strategy choose_strategy(const HankelIntegrand& integrand, double tol, const DispatchConfig& config = {});

/// I(d, κ, r) = ∫ t^{d/2+κ} e^{-(t/r)^α} J_{d/2-1}(t) dt as a HankelIntegrand.
HankelIntegrand radial_integrand(int d, double kappa, double alpha, double r);

/// Relative residual of I(d,κ,r) = (α/r^α) I(d+2, κ+α-2, r) - κ I(d+2, κ-2, r).
double recursion_residual(int d, double kappa, double alpha, double r, double tol,
                          const DispatchConfig& config = {});

}  // namespace stablekernel
