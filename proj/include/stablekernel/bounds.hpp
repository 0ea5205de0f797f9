#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stablekernel/kappa.hpp"
#include "stablekernel/kernels.hpp"

namespace stablekernel {

/// One evaluated grid point of a certification run.
struct CertRow {
    int d = 1;
    double alpha = 1.0;
    double c = 1.0;
    std::string kappa;   ///< "num/den"
    double t = 1.0;
    double radius = 0.0;
    std::string quantity;  ///< density, laplacian, gradient, laplacian+gradient
    double value = 0.0;
    double reference = 0.0;
    double ratio = 0.0;
};

/// K(ε) found by threshold_finder; radius is NaN when nothing certified within the budget.
struct Threshold {
    double epsilon;
    double radius;
    double best_epsilon;  ///< smallest ε the tail of the grid supports
};

struct CertReport {
    std::string check;
    std::vector<CertRow> rows;
    std::vector<std::pair<std::string, double>> empirical_constants;
    std::vector<Threshold> thresholds;
    bool passed = false;
    double tolerance_used = 0.0;
    std::vector<std::string> notes;

    /// Value of a named empirical constant; throws std::out_of_range when absent.
    double constant(const std::string& name) const;

    /// CSV body (header d,alpha,c,kappa,t,radius,quantity,value,reference,ratio) followed by a
    /// footer of "# key,value" lines.
    void write_csv(std::ostream& out) const;
};

struct CertOptions {
    double max_drift = 0.05;  ///< allowed relative change of fitted constants under refinement
    unsigned workers = 0;     ///< 0 = hardware concurrency
};

/// Default time grid {0.1, 1, 10}.
std::vector<double> default_t_grid();
/// Default radius grid: 60 points log-spaced on [0.1, 300].
std::vector<double> default_radius_grid();

/// Ratios g (t^{1/α} + |x-y|)^{d+α} / t; reports G1 = min and G2 = max.
CertReport bg_certify(const StableParams& params, const std::vector<double>& t_list,
                      const std::vector<double>& radius_list, double tol = kDefaultTol, const CertOptions& options = {});

/// K = max (|Δ_κ g| + |∇_κ g|) t^{(d+κ)/α}, the gradient term only when κ > 1-d.
CertReport sup_bound_check(const StableParams& params, const KappaOrder& kappa, const std::vector<double>& t_list,
                           const std::vector<double>& radius_list, double tol = kDefaultTol,
                           const CertOptions& options = {});

/// Minimal M in |D^{(κ)} g| <= M/(t^{1/α}+|x-y|)^{d+κ}, or M t/(t^{1/α}+|x-y|)^{d+α+κ} for integer κ.
/// Non-integer κ tests Δ_κ g and ∇_κ g; an even κ tests Δ_κ g and an odd κ ∇_κ g, the instances whose
/// symbol is a polynomial. Requires κ > 0 and α >= 1.
CertReport classical_bound_check(const StableParams& params, const KappaOrder& kappa,
                                 const std::vector<double>& t_list, const std::vector<double>& radius_list,
                                 double tol = kDefaultTol, const CertOptions& options = {});

enum class TailQuantity { laplacian, gradient };

struct ThresholdOptions {
    double min_radius = 0.1;
    double radius_budget = 1e4;
    int points_per_decade = 20;
    unsigned workers = 0;
};

/// At ct = 1, the smallest grid radius R* such that value/tail stays in [1-ε, 1+ε] at every grid
/// radius >= R* (at least two of them). One threshold per ε; passed iff all were found.
CertReport threshold_finder(int d, double alpha, const KappaOrder& kappa, const std::vector<double>& epsilons,
                            TailQuantity quantity = TailQuantity::laplacian, double tol = kDefaultTol,
                            const ThresholdOptions& options = {});

}  // namespace stablekernel
