#include "stablekernel/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "stablekernel/errors.hpp"
#include "stablekernel/special_functions.hpp"

namespace stablekernel::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

struct Axis {
    std::vector<double> sq;      // λ²
    std::vector<double> weight;  // midpoint weight times Jacobian
    std::vector<double> wave;    // cos(|x| λ), first axis only
};

// Half-axis [0, L] with m midpoint nodes in u and λ = L u³.
Axis graded_axis(double L, int m, double radius) {
    Axis a;
    a.sq.resize(m);
    a.weight.resize(m);
    a.wave.resize(m);
    const double h = 1.0 / m;
    for (int i = 0; i < m; ++i) {
        const double u = (i + 0.5) * h;
        const double lambda = L * u * u * u;
        a.sq[i] = lambda * lambda;
        a.weight[i] = 3.0 * L * u * u * h;
        a.wave[i] = std::cos(radius * lambda);
    }
    return a;
}

double grid_value(int d, double alpha, double kappa, double radius, double L, int n) {
    const int m = n / 2;
    const Axis ax = graded_axis(L, m, radius);
    const double half_k = 0.5 * kappa;
    const double half_a = 0.5 * alpha;
    auto f = [&](double rho2) {
        const double lr = std::log(rho2);
        const double e = std::exp(half_a * lr);
        return e > 745.0 ? 0.0 : std::exp(half_k * lr - e);
    };
    double total = 0.0;
    if (d == 1) {
        for (int i = 0; i < m; ++i) total += ax.weight[i] * ax.wave[i] * f(ax.sq[i]);
    } else if (d == 2) {
        for (int i = 0; i < m; ++i) {
            double row = 0.0;
            for (int j = 0; j < m; ++j) row += ax.weight[j] * f(ax.sq[i] + ax.sq[j]);
            total += ax.weight[i] * ax.wave[i] * row;
        }
    } else {
        // The last two axes are interchangeable: sum j <= k and double the off-diagonal.
        for (int i = 0; i < m; ++i) {
            double slab = 0.0;
            for (int j = 0; j < m; ++j) {
                const double base = ax.sq[i] + ax.sq[j];
                double row = 0.5 * ax.weight[j] * f(base + ax.sq[j]);
                for (int k = j + 1; k < m; ++k) row += ax.weight[k] * f(base + ax.sq[k]);
                slab += 2.0 * ax.weight[j] * row;
            }
            total += ax.weight[i] * ax.wave[i] * slab;
        }
    }
    // Each axis was folded onto [0, L].
    return total * std::pow(2.0, d) / std::pow(2.0 * kPi, d);
}

}  // namespace

double cauchy_density(int d, double c, double t, double radius) {
    if (d < 1) throw DomainError("cauchy_density: dimension must be >= 1");
    if (!(c > 0.0) || !(t > 0.0)) throw DomainError("cauchy_density: c and t must be positive");
    const double s = c * t;
    const double a = 0.5 * (d + 1);
    return std::exp(log_gamma(a) - a * std::log(kPi)) * s / std::pow(s * s + radius * radius, a);
}

double cauchy_derivatives(int d, double c, double t, double x, int order) {
    if (d != 1) throw UnsupportedError("cauchy_derivatives: only d = 1 is provided");
    if (!(c > 0.0) || !(t > 0.0)) throw DomainError("cauchy_derivatives: c and t must be positive");
    const double s = c * t;
    const double q = s * s + x * x;
    switch (order) {
        case 1: return -2.0 * s * x / (kPi * q * q);
        case 2: return 2.0 * s * (3.0 * x * x - s * s) / (kPi * q * q * q);
        default: throw DomainError("cauchy_derivatives: order must be 1 or 2");
    }
}

double default_half_width(int d, double alpha, double kappa) {
    if (!(kappa > -d)) throw DomainError("oracle: needs kappa > -d");
    // Γ(a, y)/Γ(a) <= y^{a-1} e^{-y}/Γ(a) · (1 + (a-1)/y) for y > a; solve for y = L^α.
    const double a = (kappa + d) / alpha;
    const double target = std::log(1e10) + log_gamma(a);
    double y = std::max(a + 1.0, target);
    for (int i = 0; i < 60; ++i) {
        const double next = target + (a - 1.0) * std::log(y) + std::log1p(std::max(0.0, a - 1.0) / y);
        if (std::fabs(next - y) < 1e-10) break;
        y = std::max(next, a + 1.0);
    }
    return std::max(alpha < 0.7 ? 120.0 : 60.0, std::pow(y, 1.0 / alpha));
}

OracleResult tensor_grid_D(int d, double alpha, double kappa, std::span<const double> x, double L, int n) {
    if (d < 1 || d > 3) throw UnsupportedError("tensor_grid_D: dimension must be 1, 2 or 3");
    if (static_cast<int>(x.size()) != d) throw DomainError("tensor_grid_D: point has the wrong number of coordinates");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("tensor_grid_D: alpha must lie in (0, 2)");
    if (!(kappa > -d)) throw DomainError("tensor_grid_D: needs kappa > -d");
    if (!(L > 0.0) || n < 4 || n % 4 != 0) {
        throw DomainError("tensor_grid_D: needs L > 0 and n a positive multiple of 4");
    }
    double radius = 0.0;
    for (double v : x) radius += v * v;
    radius = std::sqrt(radius);
    if (radius * L / n > kPi / 4.0) {
        throw ResolutionError("tensor_grid_D: |x| L / n = " + std::to_string(radius * L / n) +
                              " exceeds pi/4; increase n");
    }
    // The integral is rotation invariant, so x is placed on the first axis.
    const double fine = grid_value(d, alpha, kappa, radius, L, n);
    const double coarse = grid_value(d, alpha, kappa, radius, L, n / 2);
    return {fine, Method::tensor_grid, L, n, std::fabs(fine - coarse)};
}

}  // namespace stablekernel::oracle
