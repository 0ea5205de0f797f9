#include "stablekernel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stablekernel/asymptotics.hpp"
#include "stablekernel/errors.hpp"
#include "stablekernel/grid.hpp"
#include "stablekernel/parallel.hpp"

namespace stablekernel {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

struct Fit {
    double low = std::numeric_limits<double>::infinity();
    double high = -std::numeric_limits<double>::infinity();
    bool finite = true;
};

Fit fit_ratios(const std::vector<CertRow>& rows) {
    Fit f;
    for (const auto& r : rows) {
        if (!std::isfinite(r.ratio)) {
            f.finite = false;
            continue;
        }
        f.low = std::min(f.low, r.ratio);
        f.high = std::max(f.high, r.ratio);
    }
    return f;
}

double drift(double a, double b) {
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

// Evaluates one row per (t, radius) pair in input order.
using RowFn = std::function<CertRow(double t, double radius)>;

std::vector<CertRow> evaluate(const std::vector<double>& t_list, const std::vector<double>& radius_list,
                              const RowFn& fn, unsigned workers) {
    if (t_list.empty() || radius_list.empty()) throw DomainError("certification grids must be nonempty");
    for (double t : t_list) {
        if (!(t > 0.0)) throw DomainError("times must be positive");
    }
    std::vector<CertRow> rows(t_list.size() * radius_list.size());
    parallel_for(
        rows.size(),
        [&](std::size_t i) { rows[i] = fn(t_list[i / radius_list.size()], radius_list[i % radius_list.size()]); },
        workers);
    return rows;
}

CertRow base_row(const StableParams& p, const std::string& kappa, double t, double radius, std::string quantity) {
    CertRow row;
    row.d = p.d;
    row.alpha = p.alpha;
    row.c = p.c;
    row.kappa = kappa;
    row.t = t;
    row.radius = radius;
    row.quantity = std::move(quantity);
    return row;
}

std::vector<double> extend_decade(std::vector<double> grid) {
    const double top = *std::max_element(grid.begin(), grid.end());
    grid.push_back(std::sqrt(10.0) * top);
    grid.push_back(10.0 * top);
    return grid;
}

}  // namespace

double CertReport::constant(const std::string& name) const {
    for (const auto& [key, value] : empirical_constants) {
        if (key == name) return value;
    }
    throw std::out_of_range("no empirical constant named " + name);
}

void CertReport::write_csv(std::ostream& out) const {
    out << "d,alpha,c,kappa,t,radius,quantity,value,reference,ratio\n";
    for (const auto& r : rows) {
        out << r.d << ',' << fmt(r.alpha) << ',' << fmt(r.c) << ',' << r.kappa << ',' << fmt(r.t) << ','
            << fmt(r.radius) << ',' << r.quantity << ',' << fmt(r.value) << ',' << fmt(r.reference) << ','
            << fmt(r.ratio) << '\n';
    }
    out << "# check," << check << '\n';
    out << "# passed," << (passed ? "true" : "false") << '\n';
    out << "# tolerance," << fmt(tolerance_used) << '\n';
    for (const auto& [key, value] : empirical_constants) out << "# " << key << ',' << fmt(value) << '\n';
    for (const auto& th : thresholds) {
        std::ostringstream label;
        label << th.epsilon;
        out << "# K(" << label.str() << ")," << fmt(th.radius) << ",best_epsilon," << fmt(th.best_epsilon) << '\n';
    }
    for (const auto& note : notes) out << "# note," << note << '\n';
}

std::vector<double> default_t_grid() { return {0.1, 1.0, 10.0}; }

std::vector<double> default_radius_grid() { return make_grid(0.1, 300.0, 60, true); }

CertReport bg_certify(const StableParams& params, const std::vector<double>& t_list,
                      const std::vector<double>& radius_list, double tol, const CertOptions& options) {
    params.validate();
    for (double r : radius_list) {
        if (!(r > 0.0)) throw DomainError("bg_certify: radii must be positive");
    }
    const RowFn row_at = [&](double t, double radius) {
        CertRow row = base_row(params, "0/1", t, radius, "density");
        row.value = eval_density_radial(params, t, radius, tol).value;
        row.reference = t / std::pow(std::pow(t, 1.0 / params.alpha) + radius, params.d + params.alpha);
        row.ratio = row.value / row.reference;
        return row;
    };
    CertReport report;
    report.check = "bg_certify";
    report.tolerance_used = tol;
    report.rows = evaluate(t_list, radius_list, row_at, options.workers);
    const Fit coarse = fit_ratios(report.rows);
    const Fit fine = fit_ratios(evaluate(t_list, refine_grid(radius_list), row_at, options.workers));
    const double change = std::max(drift(coarse.low, fine.low), drift(coarse.high, fine.high));
    report.empirical_constants = {{"G1", coarse.low}, {"G2", coarse.high}, {"refinement_drift", change}};
    report.passed = coarse.finite && fine.finite && coarse.low > 0.0 && std::isfinite(coarse.high) &&
                    change <= options.max_drift;
    return report;
}

CertReport sup_bound_check(const StableParams& params, const KappaOrder& kappa, const std::vector<double>& t_list,
                           const std::vector<double>& radius_list, double tol, const CertOptions& options) {
    params.validate();
    if (!(kappa > KappaOrder(-params.d))) throw DomainError("sup_bound_check: needs kappa > -d");
    const bool with_gradient = kappa > KappaOrder(1 - params.d);
    const double k = kappa.value();
    const RowFn row_at = [&](double t, double radius) {
        CertRow row = base_row(params, kappa.to_string(), t, radius, with_gradient ? "laplacian+gradient" : "laplacian");
        row.value = std::fabs(frac_laplacian_g_radial(params, k, t, radius, tol).value);
        if (with_gradient) row.value += std::fabs(frac_gradient_g_radial(params, k, t, radius, tol).value);
        row.reference = std::pow(t, -(params.d + k) / params.alpha);
        row.ratio = row.value / row.reference;
        return row;
    };
    CertReport report;
    report.check = "sup_bound_check";
    report.tolerance_used = tol;
    if (!with_gradient) report.notes.push_back("kappa <= 1-d: gradient term omitted");
    report.rows = evaluate(t_list, radius_list, row_at, options.workers);
    const Fit coarse = fit_ratios(report.rows);
    const Fit refined = fit_ratios(evaluate(t_list, refine_grid(radius_list), row_at, options.workers));
    std::vector<double> longer = t_list;
    longer.push_back(10.0 * *std::max_element(t_list.begin(), t_list.end()));
    const Fit extended = fit_ratios(evaluate(longer, radius_list, row_at, options.workers));
    const double change = std::max(drift(coarse.high, refined.high), drift(coarse.high, extended.high));
    report.empirical_constants = {{"K", coarse.high}, {"refinement_drift", change}};
    report.passed = coarse.finite && refined.finite && extended.finite && coarse.high > 0.0 &&
                    std::isfinite(coarse.high) && change <= options.max_drift;
    return report;
}

CertReport classical_bound_check(const StableParams& params, const KappaOrder& kappa,
                                 const std::vector<double>& t_list, const std::vector<double>& radius_list,
                                 double tol, const CertOptions& options) {
    params.validate();
    if (!(kappa > KappaOrder(0))) throw DomainError("classical_bound_check: needs kappa > 0");
    if (!(params.alpha >= 1.0)) throw DomainError("classical_bound_check: needs alpha >= 1");
    const double k = kappa.value();
    const bool integer_form = kappa.is_integer();
    const bool use_laplacian = !integer_form || kappa.is_even_integer();
    const bool use_gradient = (!integer_form || kappa.is_odd_integer()) && kappa > KappaOrder(1 - params.d);
    const double a = params.alpha;
    const RowFn row_at = [&](double t, double radius) {
        CertRow row = base_row(params, kappa.to_string(), t, radius,
                               use_laplacian && use_gradient ? "laplacian+gradient"
                               : use_laplacian              ? "laplacian"
                                                            : "gradient");
        // Each instance is fitted separately; the row keeps the larger ratio.
        double value = 0.0;
        if (use_laplacian) value = std::fabs(frac_laplacian_g_radial(params, k, t, radius, tol).value);
        if (use_gradient) value = std::max(value, std::fabs(frac_gradient_g_radial(params, k, t, radius, tol).value));
        const double base = std::pow(t, 1.0 / a) + radius;
        row.value = value;
        row.reference = integer_form ? t / std::pow(base, params.d + a + k) : 1.0 / std::pow(base, params.d + k);
        row.ratio = row.value / row.reference;
        return row;
    };
    CertReport report;
    report.check = "classical_bound_check";
    report.tolerance_used = tol;
    report.notes.push_back(integer_form ? "integer kappa: bound M t/(t^{1/alpha}+|x-y|)^{d+alpha+kappa}"
                                        : "bound M/(t^{1/alpha}+|x-y|)^{d+kappa}");
    report.rows = evaluate(t_list, radius_list, row_at, options.workers);
    const Fit coarse = fit_ratios(report.rows);
    const Fit refined = fit_ratios(evaluate(t_list, refine_grid(radius_list), row_at, options.workers));
    const Fit extended = fit_ratios(evaluate(t_list, extend_decade(radius_list), row_at, options.workers));
    const double change = std::max(drift(coarse.high, refined.high), drift(coarse.high, extended.high));
    report.empirical_constants = {{"M", coarse.high}, {"refinement_drift", change}};
    report.passed = coarse.finite && refined.finite && extended.finite && std::isfinite(coarse.high) &&
                    change <= options.max_drift;
    return report;
}

CertReport threshold_finder(int d, double alpha, const KappaOrder& kappa, const std::vector<double>& epsilons,
                            TailQuantity quantity, double tol, const ThresholdOptions& options) {
    if (epsilons.empty()) throw DomainError("threshold_finder: no epsilon given");
    for (double e : epsilons) {
        if (!(e > 0.0 && e < 1.0)) throw DomainError("threshold_finder: epsilon must lie in (0, 1)");
    }
    if (!(options.min_radius > 0.0 && options.radius_budget > options.min_radius)) {
        throw DomainError("threshold_finder: needs 0 < min_radius < radius_budget");
    }
    const StableParams params{d, alpha, 1.0};
    params.validate();
    const bool laplacian = quantity == TailQuantity::laplacian;
    // Validates the branch range before any quadrature runs.
    laplacian ? tail_constant_D(d, alpha, kappa) : tail_constant_N(d, alpha, kappa);

    const int decades = static_cast<int>(std::ceil(std::log10(options.radius_budget / options.min_radius) - 1e-12));
    const std::vector<double> radii =
        make_grid(options.min_radius, options.radius_budget, std::max(2, decades * options.points_per_decade + 1), true);
    const RowFn row_at = [&](double t, double radius) {
        CertRow row = base_row(params, kappa.to_string(), t, radius, laplacian ? "laplacian" : "gradient");
        row.value = laplacian ? eval_D(d, alpha, kappa, radius, tol).value
                              : eval_N_radial(d, alpha, kappa.value(), radius, tol).value;
        row.reference = laplacian ? tail_D(d, alpha, kappa, radius) : tail_N(d, alpha, kappa, radius);
        row.ratio = row.value / row.reference;
        return row;
    };

    CertReport report;
    report.check = "threshold_finder";
    report.tolerance_used = tol;
    report.rows = evaluate({1.0}, radii, row_at, options.workers);

    // deviation[i] = max |ratio - 1| over radii[i..]
    std::vector<double> deviation(radii.size());
    double running = 0.0;
    for (std::size_t i = radii.size(); i-- > 0;) {
        const double dev = std::isfinite(report.rows[i].ratio) ? std::fabs(report.rows[i].ratio - 1.0)
                                                               : std::numeric_limits<double>::infinity();
        running = std::max(running, dev);
        deviation[i] = running;
    }
    const double best = radii.size() >= 2 ? deviation[radii.size() - 2] : kNaN;
    report.passed = true;
    for (double eps : epsilons) {
        double found = kNaN;
        for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
            if (deviation[i] <= eps) {
                found = radii[i];
                break;
            }
        }
        report.thresholds.push_back({eps, found, best});
        if (std::isnan(found)) report.passed = false;
    }
    report.empirical_constants = {{"radius_budget", options.radius_budget}, {"best_epsilon", best}};
    if (!report.passed) report.notes.push_back("no threshold certified within the radius budget for some epsilon");
    return report;
}

}  // namespace stablekernel
