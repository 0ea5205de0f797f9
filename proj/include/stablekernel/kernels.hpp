#pragma once

#include <complex>
#include <span>
#include <vector>

#include "stablekernel/hankel.hpp"
#include "stablekernel/kappa.hpp"

namespace stablekernel {

/// Dimension d, stability index α and diffusivity c of the isotropic α-stable process.
struct StableParams {
    int d = 1;
    double alpha = 1.0;
    double c = 1.0;

    /// d >= 1, 0 < α < 2 (the Gaussian endpoint is excluded), c > 0.
    void validate() const;
};

/// A real kernel value with the quadrature bookkeeping behind it.
struct KernelValue {
    double value = 0.0;
    double err_estimate = 0.0;
    Strategy strategy = Strategy::closed_form;
    long evals = 0;
};

constexpr double kDefaultTol = 1e-9;

/// D(κ, x) = (2π)^{-d} ∫ |λ|^κ e^{i(x,λ) - |λ|^α} dλ at |x| = radius (ct = 1).
KernelValue eval_D(int d, double alpha, const KappaOrder& kappa, double radius, double tol = kDefaultTol,
                   const DispatchConfig& config = {});

/// Same as eval_D for a real order; used where κ is itself derived from α.
KernelValue eval_D_real(int d, double alpha, double kappa, double radius, double tol = kDefaultTol,
                        const DispatchConfig& config = {});

/// D(κ, 0) = (2π)^{-d} |S^{d-1}| Γ((κ+d)/α) / α.
double eval_D_origin(int d, double alpha, double kappa);

/// Radial profile n of N(κ, x) = i n(κ, |x|) x/|x|; n(κ, 0) = 0.
KernelValue eval_N_radial(int d, double alpha, double kappa, double radius, double tol = kDefaultTol,
                          const DispatchConfig& config = {});

/// N(κ, x) = (2π)^{-d} ∫ λ|λ|^{κ-1} e^{i(x,λ) - |λ|^α} dλ, one complex entry per coordinate.
std::vector<std::complex<double>> eval_N(int d, double alpha, const KappaOrder& kappa, std::span<const double> x,
                                         double tol = kDefaultTol, const DispatchConfig& config = {});

/// Transition density g(t, x, y).
double eval_density(const StableParams& params, double t, std::span<const double> x, std::span<const double> y,
                    double tol = kDefaultTol);
KernelValue eval_density_radial(const StableParams& params, double t, double radius, double tol = kDefaultTol);

/// Δ_κ g(t,·,y)(x) = (ct)^{-(d+κ)/α} D(κ, (ct)^{-1/α}(x-y)).
KernelValue frac_laplacian_g(const StableParams& params, const KappaOrder& kappa, double t, std::span<const double> x,
                             std::span<const double> y, double tol = kDefaultTol);
KernelValue frac_laplacian_g_radial(const StableParams& params, double kappa, double t, double radius,
                                    double tol = kDefaultTol);

/// ∇_κ g(t,·,y)(x) = (ct)^{-(d+κ)/α} N(κ, (ct)^{-1/α}(x-y)).
std::vector<std::complex<double>> frac_gradient_g(const StableParams& params, const KappaOrder& kappa, double t,
                                                  std::span<const double> x, std::span<const double> y,
                                                  double tol = kDefaultTol);
/// Radial profile of ∇_κ g: the gradient is i·value·(x-y)/|x-y|.
KernelValue frac_gradient_g_radial(const StableParams& params, double kappa, double t, double radius,
                                   double tol = kDefaultTol);

/// max over coordinate directions ν of |(N(κ,x),ν) + i (x,ν)/|x|² (α D(α+κ-1,x) - (d+κ-1) D(κ-1,x))|.
double gradient_identity_residual(int d, double alpha, const KappaOrder& kappa, std::span<const double> x,
                                  double tol = kDefaultTol);

}  // namespace stablekernel
