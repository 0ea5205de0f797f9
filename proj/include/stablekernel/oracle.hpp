#pragma once

#include <span>

namespace stablekernel::oracle {

enum class Method { cauchy_closed_form, tensor_grid };

struct OracleResult {
    double value = 0.0;
    Method method = Method::cauchy_closed_form;
    double half_width = 0.0;   ///< L, tensor grid only
    int points = 0;            ///< n per axis, tensor grid only
    double refinement = 0.0;   ///< |value(n) - value(n/2)|, tensor grid only
};

/// α = 1 density Γ((d+1)/2) π^{-(d+1)/2} ct / ((ct)² + radius²)^{(d+1)/2}.
double cauchy_density(int d, double c, double t, double radius);

/// First or second x-derivative of the one-dimensional Cauchy density (ct/π)/((ct)² + x²).
double cauchy_derivatives(int d, double c, double t, double x, int order);

/// Smallest box half-width L for which the radial tail of |λ|^κ e^{-|λ|^α} beyond L is below
/// 1e-10 of the whole integral, and never below 60 (120 for α < 0.7).
double default_half_width(int d, double alpha, double kappa);

/// (2π)^{-d} ∫_{[-L,L]^d} |λ|^κ e^{i(x,λ) - |λ|^α} dλ by a midpoint tensor rule with n points per
/// axis, d <= 3. The axes are graded (λ = L u³) so the cusp of |λ|^κ and |λ|^α at the origin is
/// integrated to high order without special cells. Requires |x| L / n <= π/4.
OracleResult tensor_grid_D(int d, double alpha, double kappa, std::span<const double> x, double L, int n);

}  // namespace stablekernel::oracle
