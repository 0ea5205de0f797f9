#pragma once

#include <complex>
#include <vector>

namespace stablekernel {

/// Order of J_μ or K_μ. Only μ ≥ -1/2 occurs (μ = d/2 - 1 or d/2).
class BesselOrder {
public:
    explicit BesselOrder(double mu);

    /// Exact construction from 2μ, e.g. from_twice(d - 2) for μ = d/2 - 1.
    static BesselOrder from_twice(int twice_mu);

    double mu() const noexcept { return mu_; }
    bool is_half_integer() const noexcept;
    bool is_integer() const noexcept;

private:
    double mu_;
};

/// Γ(x) for x > 0. Throws DomainError for x <= 0, OverflowError past the double range.
double gamma(double x);

/// log Γ(x) for x > 0.
double log_gamma(double x);

/// 1/Γ(x) for any real x; exactly zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// log|1/Γ(x)| and its sign; sign is 0 at the poles.
struct SignedLog {
    double log_abs;
    int sign;
};
SignedLog log_reciprocal_gamma(double x);

/// sin(πx) and cos(πx) with exact zeros at integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

/// Bessel function of the first kind J_μ(t), t >= 0.
double bessel_j(BesselOrder order, double t);

/// First n positive zeros of J_μ, strictly increasing.
std::vector<double> bessel_j_zeros(BesselOrder order, int n);

/// McMahon's large-zero expansion for the s-th zero (1-based); used as an initial guess.
double bessel_j_zero_mcmahon(double mu, int s);

/// Modified Bessel function of the second kind. Complex z needs half-integer μ.
std::complex<double> bessel_k(BesselOrder order, std::complex<double> z);
double bessel_k(BesselOrder order, double x);

/// e^z K_μ(z) for half-integer μ, Re z > 0: √(π/2z) times a finite polynomial in 1/z.
std::complex<double> bessel_k_scaled(BesselOrder order, std::complex<double> z);

namespace detail {
// The three J_μ regimes (series t <= 5, Miller 5 < t < 25, Hankel t >= 25), exposed so that
// their agreement across the switch points can be tested.
double bessel_j_series(double mu, double t);
double bessel_j_miller(double mu, double t);
double bessel_j_hankel(double mu, double t);
}  // namespace detail

}  // namespace stablekernel
