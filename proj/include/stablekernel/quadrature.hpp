#pragma once

// Generic one-dimensional integration building blocks shared by the Hankel engines.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

namespace stablekernel::quad {

template <typename T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <typename T>
struct Estimate {
    T value{};
    double error = 0.0;
    long evals = 0;
};

namespace gk21 {
// Gauss-Kronrod 10/21 nodes and weights (QUADPACK qk21).
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600693314825, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
}  // namespace gk21

/// Single Gauss-Kronrod 21-point panel; error is |K21 - G10|.
template <typename T, typename F>
Estimate<T> gauss_kronrod_21(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T kronrod = fc * gk21::wgk[10];
    T gauss{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * gk21::xgk[j];
        const T f1 = f(center - dx);
        const T f2 = f(center + dx);
        kronrod += (f1 + f2) * gk21::wgk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * gk21::wg[j / 2];
    }
    Estimate<T> out;
    out.value = kronrod * half;
    out.error = magnitude(T((kronrod - gauss) * half));
    out.evals = 21;
    return out;
}

/// Adaptive bisection with the 21-point rule until the total error is below
/// max(abs_tol, rel_tol |I|) or the interval budget is spent.
template <typename T, typename F>
Estimate<T> integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                               int max_intervals = 200) {
    struct Interval {
        double a, b;
        Estimate<T> est;
    };
    std::vector<Interval> parts;
    parts.push_back({a, b, gauss_kronrod_21<T>(f, a, b)});
    long evals = parts.front().est.evals;
    while (true) {
        T total{};
        double err = 0.0;
        for (const auto& p : parts) {
            total += p.est.value;
            err += p.est.error;
        }
        if (err <= std::max(abs_tol, rel_tol * magnitude(total)) ||
            static_cast<int>(parts.size()) >= max_intervals) {
            return {total, err, evals};
        }
        auto worst = std::max_element(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) {
            return x.est.error < y.est.error;
        });
        const double mid = 0.5 * (worst->a + worst->b);
        if (!(mid > worst->a && mid < worst->b)) return {total, err, evals};
        Interval left{worst->a, mid, gauss_kronrod_21<T>(f, worst->a, mid)};
        Interval right{mid, worst->b, gauss_kronrod_21<T>(f, mid, worst->b)};
        evals += left.est.evals + right.est.evals;
        *worst = left;
        parts.push_back(right);
    }
}

/// Tanh-sinh rule on [a, b] for integrands with an algebraic singularity at a (or b).
/// f receives the abscissa and its distance from a, which stays accurate near the endpoint.
template <typename T, typename F>
Estimate<T> integrate_tanh_sinh(F&& f, double a, double b, double rel_tol, int max_levels = 9) {
    constexpr double kPi = std::numbers::pi;
    const double len = b - a;
    constexpr double u_max = 6.0;
    long evals = 0;
    auto node = [&](double u, bool near_a) -> T {
        const double q = std::exp(-kPi * std::sinh(u));
        const double w = len * kPi * std::cosh(u) * q / ((1.0 + q) * (1.0 + q));
        const double dist = len * q / (1.0 + q);
        if (w == 0.0 || dist == 0.0) return T{};
        ++evals;
        return near_a ? f(a + dist, dist) * w : f(b - dist, len - dist) * w;
    };
    // Level 0: h = 1, nodes at integers (u = 0 counted once).
    double h = 1.0;
    T sum = node(0.0, true) * 0.5 + node(0.0, false) * 0.5;
    for (int k = 1; k * h <= u_max; ++k) sum += node(k * h, true) + node(k * h, false);
    T estimate = sum * h;
    double error = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        T fresh{};
        for (int k = 1; k * h <= u_max; k += 2) fresh += node(k * h, true) + node(k * h, false);
        sum += fresh;
        const T next = sum * h;
        error = magnitude(T(next - estimate));
        estimate = next;
        if (level >= 3 && error <= rel_tol * magnitude(estimate)) break;
    }
    return {estimate, error, evals};
}

/// Wynn's epsilon algorithm fed one partial sum at a time.
class WynnEpsilon {
public:
    explicit WynnEpsilon(std::size_t max_depth = 50) : max_depth_(max_depth) {}

    /// Adds the next partial sum and returns the current best extrapolant.
    double push(double partial_sum) {
        // diag_[k] holds eps_k of the newest anti-diagonal.
        std::vector<double> next;
        next.reserve(diag_.size() + 1);
        next.push_back(partial_sum);
        for (std::size_t k = 0; k < diag_.size() && k + 1 < max_depth_; ++k) {
            const double diff = next[k] - diag_[k];
            const double below = k == 0 ? 0.0 : diag_[k - 1];
            if (diff == 0.0 || !std::isfinite(diff)) break;
            next.push_back(below + 1.0 / diff);
        }
        diag_ = std::move(next);
        ++count_;
        // Even columns eps_0, eps_2, ... are the extrapolants; take the deepest one.
        const std::size_t deepest_even = (diag_.size() - 1) & ~std::size_t{1};
        previous_ = current_;
        current_ = diag_[deepest_even];
        return current_;
    }

    double estimate() const noexcept { return current_; }
    double change() const noexcept {
        return count_ < 2 ? std::numeric_limits<double>::infinity() : std::fabs(current_ - previous_);
    }
    std::size_t count() const noexcept { return count_; }
    void reset() {
        diag_.clear();
        count_ = 0;
        current_ = previous_ = 0.0;
    }

private:
    std::size_t max_depth_;
    std::vector<double> diag_;
    std::size_t count_ = 0;
    double current_ = 0.0;
    double previous_ = 0.0;
};

}  // namespace stablekernel::quad
