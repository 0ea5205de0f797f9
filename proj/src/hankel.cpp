#include "stablekernel/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "stablekernel/errors.hpp"
#include "stablekernel/quadrature.hpp"

namespace stablekernel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoundoff = 1e-15;
constexpr double kMinTol = 1e-12;

void check_tol(double tol) {
    if (!(tol >= kMinTol && tol < 1.0)) {
        throw DomainError("tolerance must lie in [1e-12, 1), got " + std::to_string(tol));
    }
}

// Zeros of J_μ: Newton-polished for the first block, McMahon beyond (error far below panel needs).
class ZeroSequence {
public:
    explicit ZeroSequence(BesselOrder order) : mu_(order.mu()), exact_(bessel_j_zeros(order, kExact)) {}

    double operator()(int s) const {
        if (s <= kExact) return exact_[static_cast<std::size_t>(s - 1)];
        return bessel_j_zero_mcmahon(mu_, s);
    }

private:
    static constexpr int kExact = 48;
    double mu_;
    std::vector<double> exact_;
};

// Real-axis integrand t^ν P((t/r)^α) e^{-(t/r)^α} J_μ(t) with a polynomial P.
struct PanelIntegrand {
    double nu;
    double mu;
    double alpha;
    double r;
    std::vector<double> poly;

    double weight(double t) const {
        const double u = std::pow(t / r, alpha);
        if (u > 745.0) return 0.0;
        double p = 0.0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * u + *it;
        return std::pow(t, nu) * p * std::exp(-u);
    }
    // Bound on the oscillation amplitude t^{ν-1/2} Σ|c_j| u^j e^{-u}, in logs.
    double log_amplitude(double t) const {
        const double u = std::pow(t / r, alpha);
        double p = 0.0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * u + std::fabs(*it);
        return (nu - 0.5) * std::log(t) + std::log(p) - u;
    }
    // Past this point every monomial of the amplitude bound decreases.
    double peak() const {
        double t_peak = 0.0;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const double u = (nu - 0.5) / alpha + static_cast<double>(j);
            if (poly[j] != 0.0 && u > 0.0) t_peak = std::max(t_peak, r * std::pow(u, 1.0 / alpha));
        }
        return t_peak;
    }
};

// Integrates by parts m times with d/dt[t^{μ+1} J_{μ+1}] = t^{μ+1} J_μ. Each step lowers the
// growth of the oscillation amplitude by one power of t, which removes most of the cancellation
// between panels when ν is large.
PanelIntegrand integrate_by_parts(const HankelIntegrand& in, int m) {
    const double p = in.nu - in.mu - 1.0;
    std::vector<double> a{1.0};
    for (int k = 0; k < m; ++k) {
        const double q = p - 2.0 * k;
        std::vector<double> next(a.size() + 1, 0.0);
        for (std::size_t j = 0; j < next.size(); ++j) {
            const double cur = j < a.size() ? a[j] : 0.0;
            const double prev = j > 0 ? a[j - 1] : 0.0;
            next[j] = -((q + in.alpha * static_cast<double>(j)) * cur - in.alpha * prev);
        }
        a = std::move(next);
    }
    return {in.nu - m, in.mu + m, in.alpha, in.r, std::move(a)};
}

}  // namespace

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::small_r_direct: return "small_r_direct";
        case Strategy::direct_accelerated: return "direct_accelerated";
        case Strategy::contour: return "contour";
        case Strategy::tail_series: return "tail_series";
        case Strategy::closed_form: return "closed_form";
    }
    return "unknown";
}

void HankelIntegrand::validate() const {
    if (!(mu >= -0.5) || !std::isfinite(mu)) throw DomainError("Hankel integrand: mu must be >= -1/2");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("Hankel integrand: alpha must lie in (0, 2)");
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("Hankel integrand: r must be positive and finite");
    if (!std::isfinite(nu) || !(nu + mu > -1.0)) {
        throw DomainError("Hankel integrand: nu + mu must exceed -1 for integrability at the origin");
    }
}

bool HankelIntegrand::has_finite_limit() const noexcept {
    return nu > std::fabs(mu) - 1.0;
}

HankelIntegrand radial_integrand(int d, double kappa, double alpha, double r) {
    return {0.5 * d + kappa, 0.5 * d - 1.0, alpha, r};
}

// ---------------------------------------------------------------------------------------------
// Real-axis engine

QuadResult eval_I_direct(const HankelIntegrand& in, double tol, const DirectOptions& options) {
    in.validate();
    check_tol(tol);
    const bool accelerate = in.r > 1.0;
    const Strategy strategy = accelerate ? Strategy::direct_accelerated : Strategy::small_r_direct;
    // Only the oscillatory regime benefits; for small r the by-parts terms would cancel instead.
    const int parts = accelerate ? std::max(0, static_cast<int>(std::ceil(in.nu - 0.5))) : 0;
    const PanelIntegrand env = integrate_by_parts(in, parts);
    const BesselOrder order(env.mu);

    auto integrand = [&](double t) -> double {
        if (t <= 0.0) return 0.0;
        const double w = env.weight(t);
        return w == 0.0 ? 0.0 : w * bessel_j(order, t);
    };

    const ZeroSequence zeros(order);
    const double t_peak = env.peak();

    double sum = 0.0;
    double err = 0.0;
    double sq_norm = 0.0;
    long evals = 0;

    auto add = [&](const quad::Estimate<double>& e) {
        sum += e.value;
        err += e.error;
        sq_norm += e.value * e.value;
        evals += e.evals;
    };
    auto floor_error = [&] { return kRoundoff * std::sqrt(sq_norm); };
    auto finish = [&](double value, double extra) {
        return QuadResult{value, extra + err + floor_error(), strategy, evals};
    };
    // Largest possible contribution of [t, ∞) is bounded through the amplitude at t (past the peak).
    auto negligible_beyond = [&](double t, double reference) {
        if (t <= t_peak) return false;
        const double la = env.log_amplitude(t) + std::log(2.0 * kPi);
        if (la < -700.0) return true;
        return std::exp(la) <= 1e-3 * tol * std::fabs(reference);
    };

    // Origin region [0, z_1]: algebraic singularity t^{ν+μ} and the envelope scale r.
    const double z1 = zeros(1);
    {
        const double b0 = std::min(z1, in.r);
        add(quad::integrate_tanh_sinh<double>([&](double t, double) { return integrand(t); }, 0.0, b0, 1e-14));
        double a = b0;
        while (a < z1) {
            const double b = std::min(z1, 2.0 * a);
            if (negligible_beyond(a, sum) && a > 0.0) return finish(sum, 0.0);
            add(quad::integrate_adaptive<double>(integrand, a, b, 1e-4 * tol * std::fabs(sum), 1e-14));
            a = b;
        }
    }

    quad::WynnEpsilon wynn(64);
    int stable_hits = 0;
    double previous_partial = sum;
    for (int s = 1;; ++s) {
        const double a = zeros(s);
        const double b = zeros(s + 1);
        const double centre = 0.5 * (previous_partial + sum);
        if (negligible_beyond(a, centre)) return finish(sum, 0.0);
        if (evals > options.max_evals) {
            throw NoConvergenceError("eval_I_direct: evaluation budget exhausted at t = " + std::to_string(a),
                                     accelerate && wynn.count() > 2 ? wynn.estimate() : sum, err);
        }
        previous_partial = sum;
        add(quad::integrate_adaptive<double>(integrand, a, b, 1e-4 * tol * std::fabs(centre), 1e-14));

        if (!accelerate || b <= t_peak) continue;
        const double extrapolant = wynn.push(sum);
        const double change = wynn.change();
        const double floor = floor_error();
        if (wynn.count() >= 4 && change <= 0.5 * std::max(tol * std::fabs(extrapolant), floor)) {
            if (++stable_hits >= 2) return finish(extrapolant, change);
        } else {
            stable_hits = 0;
        }
        if (static_cast<int>(wynn.count()) >= options.wynn_window) {
            wynn.reset();
            stable_hits = 0;
        }
    }
}

// ---------------------------------------------------------------------------------------------
// Rotated contour

BetaInterval admissible_beta(double alpha) {
    return {-0.5 * kPi, std::min(0.0, 0.5 * kPi * (1.0 / alpha - 1.0))};
}

QuadResult eval_I_contour(const HankelIntegrand& in, double tol) {
    return eval_I_contour(in, admissible_beta(in.alpha).midpoint(), tol);
}

QuadResult eval_I_contour(const HankelIntegrand& in, double beta, double tol) {
    in.validate();
    check_tol(tol);
    const BesselOrder order(in.mu);
    if (!order.is_half_integer()) {
        throw UnsupportedError("eval_I_contour: needs a half-integer Bessel order (odd dimension)");
    }
    if (!in.has_finite_limit()) {
        throw DomainError("eval_I_contour: requires nu > |mu| - 1");
    }
    const BetaInterval range = admissible_beta(in.alpha);
    if (!(beta > range.lower && beta < range.upper)) {
        throw DomainError("eval_I_contour: beta must lie strictly inside (" + std::to_string(range.lower) + ", " +
                          std::to_string(range.upper) + ")");
    }

    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    const double theta = in.alpha * (beta + 0.5 * kPi);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const std::complex<double> ray(cb, sb);

    const double abs_mu = std::fabs(in.mu);
    const double log_k_small = log_gamma(abs_mu) + (abs_mu - 1.0) * std::log(2.0);
    auto integrand = [&](double s) -> std::complex<double> {
        if (s <= 0.0) return {};
        const double env = std::pow(s / in.r, in.alpha);
        if (s < 1e-20) {
            // K_μ(w) = Γ(|μ|) 2^{|μ|-1} w^{-|μ|} (1 + O(w²)); the closed polynomial would overflow here.
            const double log_mag = (in.nu - abs_mu) * std::log(s) + log_k_small - env * ct;
            const double phase = (in.nu - abs_mu + 1.0) * beta - env * st;
            return std::polar(std::exp(log_mag), phase);
        }
        const double log_mag = in.nu * std::log(s) - env * ct - s * cb;
        if (log_mag < -745.0) return {};
        const double phase = in.nu * beta - env * st - s * sb + beta;
        return std::polar(std::exp(log_mag), phase) * bessel_k_scaled(order, s * ray);
    };

    // Truncate where s cos β - ν log s clears -log(tol) + 40.
    const double target = -std::log(tol) + 40.0;
    double s_max = target / cb;
    for (int i = 0; i < 30; ++i) s_max = (target + std::max(0.0, in.nu * std::log(s_max))) / cb;

    std::complex<double> total{};
    double err = 0.0;
    long evals = 0;
    const double b0 = 0.5 * std::min(1.0, in.r);
    {
        auto e = quad::integrate_tanh_sinh<std::complex<double>>(
            [&](double s, double) { return integrand(s); }, 0.0, b0, 1e-14);
        total += e.value;
        err += e.error;
        evals += e.evals;
    }
    double a = b0;
    while (a < s_max) {
        const double b = a < 2.0 ? std::min(2.0 * a, s_max) : std::min(a + 2.0, s_max);
        auto e = quad::integrate_adaptive<std::complex<double>>(integrand, a, b,
                                                                1e-4 * tol * std::abs(total), 1e-14);
        total += e.value;
        err += e.error;
        evals += e.evals;
        a = b;
    }

    const double half_shift = 0.5 * (in.nu - in.mu);
    const double value = (2.0 / kPi) * (cos_pi(half_shift) * total.real() - sin_pi(half_shift) * total.imag());
    const double err_total = (2.0 / kPi) * (err + kRoundoff * std::abs(total));
    if (err_total > std::max(tol * std::fabs(value), 4.0 * kRoundoff * std::abs(total))) {
        throw NoConvergenceError("eval_I_contour: ray quadrature did not reach tolerance", value, err_total);
    }
    return {value, err_total, Strategy::contour, evals};
}

// ---------------------------------------------------------------------------------------------
// Large-r expansion

namespace {

struct MomentLog {
    double log_abs;  ///< log|M(ν, μ)|
    int sign;
    double log_envelope;  ///< log|M| with |sin(π z)| of the reflected 1/Γ replaced by 1
};

MomentLog hankel_moment_log(double nu, double mu) {
    const double a = 0.5 * (nu + mu + 1.0);
    const double z = 0.5 * (mu - nu + 1.0);
    const double base = nu * std::log(2.0) + log_gamma(a);
    const SignedLog rg = log_reciprocal_gamma(z);
    double envelope = base + rg.log_abs;
    if (z <= 0.0) {
        int dummy = 0;
        envelope = base + ::lgamma_r(1.0 - z, &dummy) - std::log(kPi);
    }
    return {base + rg.log_abs, rg.sign, envelope};
}

}  // namespace

double hankel_moment(double nu, double mu) {
    if (!(nu + mu > -1.0)) throw DomainError("hankel_moment: requires nu + mu > -1");
    const MomentLog m = hankel_moment_log(nu, mu);
    if (m.sign == 0) return 0.0;
    return m.sign * std::exp(m.log_abs);
}

QuadResult eval_I_tail_series(const HankelIntegrand& in, double tol) {
    in.validate();
    check_tol(tol);
    const double log_r = std::log(in.r);
    double sum = 0.0;
    double last_envelope = std::numeric_limits<double>::infinity();
    double err = std::numeric_limits<double>::infinity();
    long k = 0;
    for (; k < 4000; ++k) {
        const MomentLog m = hankel_moment_log(in.nu + in.alpha * k, in.mu);
        const double shift = -std::lgamma(static_cast<double>(k) + 1.0) - in.alpha * k * log_r;
        const double log_env = m.log_envelope + shift;
        const double envelope = std::exp(log_env);
        if (k > 1 && envelope > last_envelope) {
            err = last_envelope;  // asymptotic regime: stop at the smallest term
            break;
        }
        if (m.sign != 0) {
            const double term = ((k % 2 == 0) ? 1.0 : -1.0) * m.sign * std::exp(m.log_abs + shift);
            sum += term;
        }
        last_envelope = envelope;
        if (k > 0 && envelope <= 1e-17 * std::fabs(sum)) {
            err = envelope;
            break;
        }
    }
    const double err_total = err + kRoundoff * std::fabs(sum);
    if (!(err_total <= tol * std::fabs(sum))) {
        throw NoConvergenceError("eval_I_tail_series: expansion too coarse at r = " + std::to_string(in.r), sum,
                                 err_total);
    }
    return {sum, err_total, Strategy::tail_series, k + 1};
}

// ---------------------------------------------------------------------------------------------
// Dispatcher

namespace {

bool contour_eligible(const HankelIntegrand& in) {
    return BesselOrder(in.mu).is_half_integer() && in.has_finite_limit();
}

// Absolute rounding floor of the real-axis sum: panel magnitudes near the amplitude peak.
double predicted_direct_floor(const HankelIntegrand& in) {
    const int parts = std::max(0, static_cast<int>(std::ceil(in.nu - 0.5)));
    const PanelIntegrand env = integrate_by_parts(in, parts);
    const double t_peak = std::max(env.peak(), 1.0);
    const double amplitude = std::exp(env.log_amplitude(t_peak)) * std::sqrt(2.0 / kPi) * kPi;
    return kRoundoff * amplitude * std::sqrt(t_peak / kPi + 1.0);
}

struct Choice {
    Strategy strategy;
    bool have_series = false;
    QuadResult series{};
};

Choice choose(const HankelIntegrand& in, double tol, const DispatchConfig& config) {
    in.validate();
    check_tol(tol);
    if (in.r <= config.r_small) return {Strategy::small_r_direct};
    const bool contour_ok = contour_eligible(in) && in.r > config.r_osc;
    if (contour_ok && in.r <= config.r_series) return {Strategy::contour};

    QuadResult series{};
    bool series_ok = false;
    try {
        series = eval_I_tail_series(in, tol);
        series_ok = true;
    } catch (const NoConvergenceError&) {
        series_ok = false;
    }
    if (series_ok && in.r > config.r_series) return {Strategy::tail_series, true, series};
    if (contour_ok) return {Strategy::contour};
    if (series_ok && predicted_direct_floor(in) > 0.1 * tol * std::fabs(series.value)) {
        return {Strategy::tail_series, true, series};
    }
    return {Strategy::direct_accelerated};
}

}  // namespace

Strategy choose_strategy(const HankelIntegrand& in, double tol, const DispatchConfig& config) {
    return choose(in, tol, config).strategy;
}

QuadResult eval_I(const HankelIntegrand& in, double tol, const DispatchConfig& config) {
    const Choice c = choose(in, tol, config);
    switch (c.strategy) {
        case Strategy::contour: return eval_I_contour(in, tol);
        case Strategy::tail_series: return c.series;
        default: {
            QuadResult out = eval_I_direct(in, tol, config.direct);
            out.strategy = c.strategy;
            return out;
        }
    }
}

double recursion_residual(int d, double kappa, double alpha, double r, double tol, const DispatchConfig& config) {
    if (d < 1) throw DomainError("recursion_residual: dimension must be >= 1");
    const double lhs = eval_I(radial_integrand(d, kappa, alpha, r), tol, config).value;
    double rhs = alpha / std::pow(r, alpha) * eval_I(radial_integrand(d + 2, kappa + alpha - 2.0, alpha, r), tol, config).value;
    if (kappa != 0.0) rhs -= kappa * eval_I(radial_integrand(d + 2, kappa - 2.0, alpha, r), tol, config).value;
    return std::fabs(lhs - rhs) / (std::fabs(lhs) + std::fabs(rhs) + 1e-300);
}

}  // namespace stablekernel
