#pragma once

#include <string_view>

#include "stablekernel/kappa.hpp"

namespace stablekernel {

enum class Branch { generic_D, even_D, generic_N, odd_N, lemma1 };

std::string_view to_string(Branch b);

/// Leading tail constant with the power of |x| it multiplies.
struct AsymptoticConstant {
    double value;
    Branch branch;
    double decay_exponent;
};

/// lim_{r→∞} ∫ t^ν e^{-(t/r)^α} J_μ(t) dt = (2^ν/π) Γ((ν-μ+1)/2) Γ((ν+μ+1)/2) cos(π(ν-μ)/2), ν > |μ| - 1.
/// Exactly zero when ν - μ is an odd integer.
double lemma1_limit(double nu, double mu);

/// ∫_0^∞ t^ν K_μ(t) dt = 2^{ν-1} Γ((ν-μ+1)/2) Γ((ν+μ+1)/2), ν > |μ| - 1.
double k_bessel_moment(double nu, double mu);

/// D_κ: lim |x|^{d+κ} D(κ,x) for κ > -(d∧2), κ not an even integer.
AsymptoticConstant const_D(int d, double alpha, const KappaOrder& kappa);

/// D_{κ,α}: lim |x|^{d+α+κ} D(κ,x) for even integers κ >= 0,
/// (α+κ) 2^{κ+α-1} π^{-d/2-1} Γ((α+κ)/2) Γ((d+α+κ)/2) cos((α+κ-1)π/2).
AsymptoticConstant const_D_even(int d, double alpha, const KappaOrder& kappa);

/// N_κ for κ > 1-(d∧2), κ not an odd integer. (N(κ,x),ν) ~ -i N_κ (x,ν)/|x|^{d+κ+1}.
AsymptoticConstant const_N(int d, double alpha, const KappaOrder& kappa);

/// N_{κ,α} for odd integers κ >= 1. (N(κ,x),ν) ~ -i N_{κ,α} (x,ν)/|x|^{d+α+κ+1}, with
/// N_{κ,α} = (d+α+κ-1)(α+κ-1) 2^{κ+α-2} π^{-d/2-1} Γ((α+κ-1)/2) Γ((d+α+κ-1)/2) cos((α+κ)π/2).
AsymptoticConstant const_N_odd(int d, double alpha, const KappaOrder& kappa);

/// Parity-correct branch for D or N.
AsymptoticConstant tail_constant_D(int d, double alpha, const KappaOrder& kappa);
AsymptoticConstant tail_constant_N(int d, double alpha, const KappaOrder& kappa);

/// Leading tail of D(κ,x) at |x| = radius.
double tail_D(int d, double alpha, const KappaOrder& kappa, double radius);

/// Leading tail of the radial profile n of N(κ,x) = i n x/|x|.
double tail_N(int d, double alpha, const KappaOrder& kappa, double radius);

}  // namespace stablekernel
