#include "stablekernel/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stablekernel/errors.hpp"

namespace stablekernel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxGammaArg = 171.62437695630271;

// glibc's lgamma writes the global signgam; the reentrant form keeps this file free of shared state.
double lgamma_positive(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

}  // namespace

BesselOrder::BesselOrder(double mu) : mu_(mu) {
    if (!(mu >= -0.5)) {
        throw DomainError("Bessel order must satisfy mu >= -1/2, got " + std::to_string(mu));
    }
}

BesselOrder BesselOrder::from_twice(int twice_mu) {
    return BesselOrder(0.5 * twice_mu);
}

bool BesselOrder::is_half_integer() const noexcept {
    const double twice = 2.0 * mu_;
    return twice == std::floor(twice) && std::fmod(std::fabs(twice), 2.0) == 1.0;
}

bool BesselOrder::is_integer() const noexcept {
    return mu_ == std::floor(mu_);
}

double gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("gamma: argument must be positive, got " + std::to_string(x));
    }
    if (x > kMaxGammaArg) {
        throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
    }
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    return lgamma_positive(x);
}

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    double sign = 1.0;
    if (r < 0.0) {
        sign = -1.0;
        r = -r;
    }
    if (r > 0.5) r = 1.0 - r;
    if (r == 0.0) return 0.0;
    if (r <= 0.25) return sign * std::sin(kPi * r);
    return sign * std::cos(kPi * (0.5 - r));
}

double cos_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(std::fabs(x), 2.0);
    if (r > 1.0) r = 2.0 - r;
    if (r == 0.5) return 0.0;
    if (r < 0.25) return std::cos(kPi * r);
    if (r <= 0.75) return std::sin(kPi * (0.5 - r));
    return -std::cos(kPi * (1.0 - r));
}

SignedLog log_reciprocal_gamma(double x) {
    if (x > 0.0) return {-lgamma_positive(x), 1};
    if (x == std::floor(x)) return {-std::numeric_limits<double>::infinity(), 0};
    // 1/Γ(x) = Γ(1-x) sin(πx) / π
    const double s = sin_pi(x);
    return {lgamma_positive(1.0 - x) + std::log(std::fabs(s)) - std::log(kPi), s > 0.0 ? 1 : -1};
}

double reciprocal_gamma(double x) {
    const auto [log_abs, sign] = log_reciprocal_gamma(x);
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

namespace detail {

double bessel_j_series(double mu, double t) {
    const double half = 0.5 * t;
    const double q = -half * half;
    double term = std::exp(mu * std::log(half) - lgamma_positive(mu + 1.0));
    double sum = term;
    for (int m = 1; m < 500; ++m) {
        term *= q / (m * (m + mu));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum) && m > half) break;
    }
    return sum;
}

// Miller's backward recurrence, normalised with (t/2)^μ = Σ_k (μ+2k) Γ(μ+k)/k! J_{μ+2k}(t).
double bessel_j_miller(double mu, double t) {
    int top = static_cast<int>(t + 10.0 * std::cbrt(t) + 40.0);
    if (top % 2 != 0) ++top;
    const int k_top = top / 2;

    // c_k = (μ+2k) Γ(μ+k)/k!, walked downward from k_top.
    double c = (mu + 2.0 * k_top) * std::exp(lgamma_positive(mu + k_top) - lgamma_positive(k_top + 1.0));
    double f_next = 0.0;
    double f = 1e-30;
    double sum = c * f;
    for (int j = top; j >= 1; --j) {
        const double f_prev = 2.0 * (mu + j) / t * f - f_next;
        f_next = f;
        f = f_prev;
        const int idx = j - 1;
        if (idx % 2 == 0) {
            const int k = idx / 2 + 1;  // coefficient index we are stepping down from
            if (k >= 2) {
                c *= (mu + 2.0 * k - 2.0) / (mu + 2.0 * k) * k / (mu + k - 1.0);
            } else {
                c /= (mu + 2.0);
            }
            sum += c * f;
        }
        if (std::fabs(f) > 1e200) {
            f *= 1e-200;
            f_next *= 1e-200;
            sum *= 1e-200;
        }
    }
    return f * std::pow(0.5 * t, mu) / sum;
}

double bessel_j_hankel(double mu, double t) {
    const double m4 = 4.0 * mu * mu;
    double p = 1.0;
    double q = 0.0;
    double b = 1.0;
    double prev_abs = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        b *= (m4 - odd * odd) / (8.0 * k * t);
        const double ab = std::fabs(b);
        if (ab > prev_abs && k > 2) break;  // asymptotic series started to diverge
        switch (k % 4) {
            case 1: q += b; break;
            case 2: p -= b; break;
            case 3: q -= b; break;
            default: p += b; break;
        }
        if (ab < 1e-17 || b == 0.0) break;
        prev_abs = ab;
    }
    const double phase = 0.5 * mu + 0.25;
    const double cp = cos_pi(phase);
    const double sp = sin_pi(phase);
    const double ct = std::cos(t);
    const double st = std::sin(t);
    const double cos_chi = ct * cp + st * sp;
    const double sin_chi = st * cp - ct * sp;
    return std::sqrt(2.0 / (kPi * t)) * (p * cos_chi - q * sin_chi);
}

}  // namespace detail

namespace {
constexpr double kSeriesMax = 5.0;
constexpr double kHankelMin = 25.0;
}  // namespace

double bessel_j(BesselOrder order, double t) {
    const double mu = order.mu();
    if (!(t >= 0.0)) {
        throw DomainError("bessel_j: argument must be nonnegative, got " + std::to_string(t));
    }
    if (t == 0.0) {
        if (mu == 0.0) return 1.0;
        if (mu > 0.0) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    if (t <= kSeriesMax) return detail::bessel_j_series(mu, t);
    if (t < kHankelMin) return detail::bessel_j_miller(mu, t);
    return detail::bessel_j_hankel(mu, t);
}

double bessel_j_zero_mcmahon(double mu, int s) {
    const double beta = (s + 0.5 * mu - 0.25) * kPi;
    const double m = 4.0 * mu * mu;
    const double b8 = 8.0 * beta;
    const double b8_3 = b8 * b8 * b8;
    return beta - (m - 1.0) / b8 - 4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * b8_3)
           - 32.0 * (m - 1.0) * (83.0 * m * m - 982.0 * m + 3779.0) / (15.0 * b8_3 * b8 * b8);
}

namespace {

// Newton on J_μ with J'_μ = (μ/t) J_μ - J_{μ+1}.
bool newton_zero(BesselOrder order, double& t) {
    const BesselOrder next(order.mu() + 1.0);
    for (int it = 0; it < 60; ++it) {
        const double j = bessel_j(order, t);
        const double dj = order.mu() / t * j - bessel_j(next, t);
        if (dj == 0.0) return false;
        const double step = j / dj;
        t -= step;
        if (!(t > 0.0)) return false;
        if (std::fabs(step) < 1e-14 * t) return true;
    }
    return false;
}

// Bracketing fallback: scan for the first sign change above `from`, then bisect and polish.
double scan_zero(BesselOrder order, double from) {
    const double h = 0.05;
    double a = from;
    double fa = bessel_j(order, a);
    for (int i = 0; i < 100000; ++i) {
        const double b = a + h;
        const double fb = bessel_j(order, b);
        if (fa == 0.0) return a;
        if ((fa < 0.0) != (fb < 0.0)) {
            double lo = a, hi = b, flo = fa;
            for (int k = 0; k < 60 && hi - lo > 1e-15 * hi; ++k) {
                const double mid = 0.5 * (lo + hi);
                const double fm = bessel_j(order, mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            double t = 0.5 * (lo + hi);
            double polished = t;
            if (newton_zero(order, polished) && polished > a && polished < b) t = polished;
            return t;
        }
        a = b;
        fa = fb;
    }
    throw NoConvergenceError("bessel_j_zeros: no sign change found", from, 0.0);
}

}  // namespace

std::vector<double> bessel_j_zeros(BesselOrder order, int n) {
    if (n < 1) throw DomainError("bessel_j_zeros: n must be positive");
    std::vector<double> zeros;
    zeros.reserve(static_cast<std::size_t>(n));
    const double mu = order.mu();
    // Consecutive zeros are separated by roughly π; the first lies above max(μ, 0).
    for (int s = 1; s <= n; ++s) {
        const double prev = zeros.empty() ? 0.0 : zeros.back();
        double t = bessel_j_zero_mcmahon(mu, s);
        const bool ok = t > 0.0 && newton_zero(order, t) && t > prev + 0.5 &&
                        (zeros.empty() ? t < std::max(mu, 0.0) + 2.0 * kPi : t < prev + 1.5 * kPi);
        if (!ok) {
            t = scan_zero(order, zeros.empty() ? std::max(mu, 0.0) + 1e-3 : prev + 0.5);
        }
        zeros.push_back(t);
    }
    return zeros;
}

std::complex<double> bessel_k_scaled(BesselOrder order, std::complex<double> z) {
    if (!(z.real() > 0.0)) throw DomainError("bessel_k: requires Re z > 0");
    if (!order.is_half_integer()) {
        throw UnsupportedError("bessel_k_scaled: only half-integer orders have the elementary form");
    }
    const int n = static_cast<int>(std::fabs(order.mu()) - 0.5);
    // Σ_{k=0}^{n} (n+k)! / (k! (n-k)!) (2z)^{-k}
    std::complex<double> poly = 1.0;
    std::complex<double> power = 1.0;
    double coeff = 1.0;
    const std::complex<double> inv2z = 1.0 / (2.0 * z);
    for (int k = 1; k <= n; ++k) {
        coeff *= static_cast<double>((n + k) * (n - k + 1)) / k;
        power *= inv2z;
        poly += coeff * power;
    }
    return std::sqrt(kPi / (2.0 * z)) * poly;
}

double bessel_k(BesselOrder order, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: requires x > 0");
    if (order.is_half_integer()) {
        return (bessel_k_scaled(order, {x, 0.0}) * std::exp(-x)).real();
    }
    // K_μ(x) = e^{-x} ∫_0^∞ exp(-x (cosh s - 1)) cosh(μ s) ds; the integrand is analytic in a strip,
    // so the trapezoidal rule converges geometrically.
    const double mu = std::fabs(order.mu());
    const double h = 0.05;
    double sum = 0.5;
    for (int k = 1; k < 1000000; ++k) {
        const double s = k * h;
        const double e = -x * (std::cosh(s) - 1.0);
        const double term = 0.5 * (std::exp(mu * s + e) + std::exp(-mu * s + e));
        sum += term;
        if (term < 1e-18 * sum && -e > 40.0 && -e > mu * s) break;
    }
    return h * sum * std::exp(-x);
}

std::complex<double> bessel_k(BesselOrder order, std::complex<double> z) {
    if (!(z.real() > 0.0)) throw DomainError("bessel_k: requires Re z > 0");
    if (order.is_half_integer()) return bessel_k_scaled(order, z) * std::exp(-z);
    if (z.imag() == 0.0) return bessel_k(order, z.real());
    throw UnsupportedError("bessel_k: complex argument is only supported for half-integer order");
}

}  // namespace stablekernel
