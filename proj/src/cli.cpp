#include "stablekernel/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "stablekernel/asymptotics.hpp"
#include "stablekernel/bounds.hpp"
#include "stablekernel/errors.hpp"
#include "stablekernel/grid.hpp"
#include "stablekernel/hankel.hpp"
#include "stablekernel/kernels.hpp"
#include "stablekernel/parallel.hpp"

namespace stablekernel::cli {

namespace {

struct Config {
    int d = 1;
    double alpha = 1.0;
    double c = 1.0;
    std::vector<std::string> kappa{"0/1"};
    std::vector<double> t{1.0};
    std::vector<double> radius;
    std::string radius_grid;
    std::vector<double> eps{0.1};
    double tol = 1e-7;
    std::string out;
    std::string check = "bg";
    std::string quantity;
    std::string mode = "radius";
    double radius_budget = 1e4;
    bool t_given = false;
};

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

std::vector<KappaOrder> kappas(const Config& cfg) {
    std::vector<KappaOrder> out;
    for (const auto& k : cfg.kappa) out.push_back(KappaOrder::parse(k));
    return out;
}

std::vector<double> radii(const Config& cfg, std::vector<double> fallback) {
    if (!cfg.radius_grid.empty() && !cfg.radius.empty()) {
        throw DomainError("give either --radius or --radius-grid, not both");
    }
    if (!cfg.radius_grid.empty()) return parse_grid(cfg.radius_grid);
    if (!cfg.radius.empty()) return cfg.radius;
    return fallback;
}

StableParams params_of(const Config& cfg) {
    const StableParams p{cfg.d, cfg.alpha, cfg.c};
    p.validate();
    return p;
}

// One output row of `eval`; the error column carries the failure text for partial rows.
struct EvalRow {
    std::string text;
    bool failed = false;
};

int cmd_eval(const Config& cfg, std::ostream& out) {
    const StableParams p = params_of(cfg);
    const auto ks = kappas(cfg);
    const auto rs = radii(cfg, {0.0});
    for (const auto& k : ks) {
        if (!(k > KappaOrder(-p.d))) throw DomainError("kappa = " + k.to_string() + " must exceed -d");
    }
    for (double t : cfg.t) {
        if (!(t > 0.0)) throw DomainError("--t must be positive");
    }
    for (double r : rs) {
        if (!(r >= 0.0)) throw DomainError("--radius must be >= 0");
    }

    out << "d,alpha,c,kappa,t,radius,g,Delta_kappa_g";
    for (int i = 1; i <= p.d; ++i) out << ",grad_re_" << i << ",grad_im_" << i;
    out << ",err_estimate,strategy,error\n";

    struct Job {
        KappaOrder kappa;
        double t;
        double radius;
    };
    std::vector<Job> jobs;
    for (const auto& k : ks)
        for (double t : cfg.t)
            for (double r : rs) jobs.push_back({k, t, r});

    std::vector<EvalRow> rows(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Job& job = jobs[i];
        std::ostringstream line;
        line << p.d << ',' << num(p.alpha) << ',' << num(p.c) << ',' << job.kappa.to_string() << ',' << num(job.t)
             << ',' << num(job.radius) << ',';
        try {
            const double g = eval_density_radial(p, job.t, job.radius, cfg.tol).value;
            const KernelValue lap = frac_laplacian_g_radial(p, job.kappa.value(), job.t, job.radius, cfg.tol);
            line << num(g) << ',' << num(lap.value);
            // x - y is placed along the first axis; the gradient is i n (x-y)/|x-y|.
            const bool has_gradient = job.kappa > KappaOrder(1 - p.d);
            const double n = has_gradient ? frac_gradient_g_radial(p, job.kappa.value(), job.t, job.radius, cfg.tol).value
                                          : std::numeric_limits<double>::quiet_NaN();
            for (int j = 0; j < p.d; ++j) {
                if (!has_gradient) {
                    line << ",,";
                } else {
                    line << ',' << num(0.0) << ',' << num(j == 0 && job.radius > 0.0 ? n : 0.0);
                }
            }
            line << ',' << num(lap.err_estimate) << ',' << to_string(lap.strategy) << ',';
        } catch (const NoConvergenceError& e) {
            rows[i].failed = true;
            line << ",";
            for (int j = 0; j < p.d; ++j) line << ",,";
            line << ",," << '"' << e.what() << '"';
        }
        rows[i].text = line.str();
    });
    bool failed = false;
    for (const auto& r : rows) {
        out << r.text << '\n';
        failed = failed || r.failed;
    }
    return failed ? kNoConvergence : kOk;
}

int cmd_constants(const Config& cfg, std::ostream& out) {
    if (cfg.d < 1) throw DomainError("--d must be >= 1");
    const std::string which = cfg.quantity.empty() ? "both" : cfg.quantity;
    if (which != "D" && which != "N" && which != "both") throw DomainError("--quantity must be D, N or both");
    out << "d,alpha,kappa,quantity,branch,value,decay_exponent\n";
    for (const auto& k : kappas(cfg)) {
        int written = 0;
        std::string reason;
        auto emit = [&](const char* q, auto fn) {
            try {
                const AsymptoticConstant c = fn(cfg.d, cfg.alpha, k);
                out << cfg.d << ',' << num(cfg.alpha) << ',' << k.to_string() << ',' << q << ',' << to_string(c.branch)
                    << ',' << num(c.value) << ',' << num(c.decay_exponent) << '\n';
                ++written;
            } catch (const DomainError& e) {
                reason = e.what();
            }
        };
        if (which != "N") emit("D", tail_constant_D);
        if (which != "D") emit("N", tail_constant_N);
        if (written == 0) throw DomainError(reason);
    }
    return kOk;
}

int cmd_certify(const Config& cfg, std::ostream& out) {
    const StableParams p = params_of(cfg);
    const auto ks = kappas(cfg);
    if (ks.size() != 1) throw DomainError("certify takes exactly one --kappa");
    const KappaOrder& k = ks.front();
    const auto ts = cfg.t_given ? cfg.t : default_t_grid();
    CertReport report;
    if (cfg.check == "bg") {
        report = bg_certify(p, ts, radii(cfg, default_radius_grid()), cfg.tol);
    } else if (cfg.check == "sup") {
        std::vector<double> rs{0.0};
        for (double r : default_radius_grid()) rs.push_back(r);
        report = sup_bound_check(p, k, ts, radii(cfg, rs), cfg.tol);
    } else if (cfg.check == "classical") {
        report = classical_bound_check(p, k, ts, radii(cfg, default_radius_grid()), cfg.tol);
    } else if (cfg.check == "threshold") {
        if (p.c != 1.0) throw DomainError("threshold works at ct = 1; leave --c at 1");
        const std::string q = cfg.quantity.empty() ? "laplacian" : cfg.quantity;
        if (q != "laplacian" && q != "gradient") throw DomainError("--quantity must be laplacian or gradient");
        ThresholdOptions opt;
        opt.radius_budget = cfg.radius_budget;
        report = threshold_finder(p.d, p.alpha, k, cfg.eps,
                                  q == "laplacian" ? TailQuantity::laplacian : TailQuantity::gradient, cfg.tol, opt);
    } else {
        throw DomainError("--check must be bg, sup, classical or threshold");
    }
    report.write_csv(out);
    return report.passed ? kOk : kCertificationFailed;
}

int cmd_convergence(const Config& cfg, std::ostream& out) {
    params_of(cfg);
    const auto ks = kappas(cfg);
    if (ks.size() != 1) throw DomainError("convergence takes exactly one --kappa");
    const KappaOrder& k = ks.front();
    if (!(k > KappaOrder(-cfg.d))) throw DomainError("kappa must exceed -d");
    std::optional<AsymptoticConstant> tail;
    try {
        tail = tail_constant_D(cfg.d, cfg.alpha, k);
    } catch (const DomainError&) {
        tail.reset();
    }
    out << "mode,tol,radius,value,err_estimate,evals,strategy,ratio_to_asymptote\n";
    bool failed = false;
    auto row = [&](double tol, double r, const char* fallback_strategy, auto&& compute) {
        out << cfg.mode << ',' << num(tol) << ',' << num(r) << ',';
        try {
            const QuadResult q = compute();
            const double scale = std::exp(-0.5 * cfg.d * std::log(2.0 * std::numbers::pi) - (cfg.d + k.value()) * std::log(r));
            const double value = scale * q.value;
            const double ratio = tail ? value * std::pow(r, tail->decay_exponent) / tail->value
                                      : std::numeric_limits<double>::quiet_NaN();
            out << num(value) << ',' << num(scale * q.err_estimate) << ',' << q.evals << ',' << to_string(q.strategy)
                << ',' << num(ratio) << '\n';
        } catch (const NoConvergenceError&) {
            failed = true;
            out << "nan,nan,0," << fallback_strategy << ",nan\n";
        }
    };
    auto strategies = [&](double tol, double r) {
        if (!(r > 0.0)) throw DomainError("convergence needs positive radii");
        const HankelIntegrand in = radial_integrand(cfg.d, k.value(), cfg.alpha, r);
        row(tol, r, "direct", [&] { return eval_I_direct(in, tol); });
        if (cfg.d % 2 == 1 && in.has_finite_limit()) row(tol, r, "contour", [&] { return eval_I_contour(in, tol); });
    };
    if (cfg.mode == "radius") {
        for (double r : radii(cfg, {25.0, 50.0, 100.0, 200.0})) strategies(cfg.tol, r);
    } else if (cfg.mode == "tol") {
        const auto rs = radii(cfg, {10.0});
        for (double r : rs)
            for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) strategies(tol, r);
    } else {
        throw DomainError("--mode must be radius or tol");
    }
    return failed ? kNoConvergence : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Isotropic alpha-stable kernels: evaluation, tail constants and bound certification",
                 "stablekernel"};
    Config cfg;
    app.set_config("--config", "", "TOML-style file with the same keys as the flags; flags win");
    app.add_option("--d", cfg.d, "dimension");
    app.add_option("--alpha", cfg.alpha, "stability index in (0, 2)");
    app.add_option("--c", cfg.c, "diffusivity");
    app.add_option("--kappa", cfg.kappa, "order as exact num/den (repeatable)")->delimiter(',');
    auto* t_opt = app.add_option("--t", cfg.t, "time(s)")->delimiter(',');
    app.add_option("--radius", cfg.radius, "radius list")->delimiter(',');
    app.add_option("--radius-grid", cfg.radius_grid, "start:stop:points:log|lin");
    app.add_option("--eps", cfg.eps, "epsilon list for threshold certification")->delimiter(',');
    app.add_option("--tol", cfg.tol, "relative quadrature tolerance");
    app.add_option("--out", cfg.out, "output CSV path (default stdout)");
    app.add_option("--check", cfg.check, "certify: bg, sup, classical or threshold");
    app.add_option("--quantity", cfg.quantity, "constants: D|N|both; threshold: laplacian|gradient");
    app.add_option("--mode", cfg.mode, "convergence: radius or tol");
    app.add_option("--radius-budget", cfg.radius_budget, "largest radius searched by the threshold check");
    app.require_subcommand(1);
    auto* eval = app.add_subcommand("eval", "g, fractional Laplacian and gradient on a radius list")->fallthrough();
    auto* constants = app.add_subcommand("constants", "asymptotic tail constants")->fallthrough();
    auto* certify = app.add_subcommand("certify", "bound certification report")->fallthrough();
    auto* convergence = app.add_subcommand("convergence", "quadrature and asymptote convergence study")->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kDomainError;
    }
    cfg.t_given = t_opt->count() > 0;

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
        file = std::make_unique<std::ofstream>(cfg.out, std::ios::binary);
        if (!*file) {
            err << "cannot open " << cfg.out << " for writing\n";
            return kDomainError;
        }
        sink = file.get();
    }
    std::ostringstream buffer;
    int code = kOk;
    try {
        if (eval->parsed()) code = cmd_eval(cfg, buffer);
        else if (constants->parsed()) code = cmd_constants(cfg, buffer);
        else if (certify->parsed()) code = cmd_certify(cfg, buffer);
        else if (convergence->parsed()) code = cmd_convergence(cfg, buffer);
    } catch (const DomainError& e) {
        *sink << buffer.str();
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const UnsupportedError& e) {
        *sink << buffer.str();
        err << "unsupported: " << e.what() << '\n';
        return kDomainError;
    } catch (const OverflowError& e) {
        *sink << buffer.str();
        err << "overflow: " << e.what() << '\n';
        return kDomainError;
    } catch (const NoConvergenceError& e) {
        *sink << buffer.str();
        err << "no convergence: " << e.what() << '\n';
        return kNoConvergence;
    }
    *sink << buffer.str();
    sink->flush();
    if (code == kCertificationFailed) err << "certification failed\n";
    if (code == kNoConvergence) err << "some rows did not converge\n";
    return code;
}

}  // namespace stablekernel::cli
