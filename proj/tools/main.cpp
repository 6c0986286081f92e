#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chiredge/ensemble.hpp"
#include "chiredge/fredholm.hpp"
#include "chiredge/io.hpp"
#include "chiredge/kernels_finite.hpp"
#include "chiredge/kernels_limit.hpp"
#include "chiredge/rng.hpp"
#include "chiredge/stats.hpp"

#ifndef CHIREDGE_VERSION
#define CHIREDGE_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using cplx = std::complex<double>;
namespace ens = chiredge::ensemble;

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    std::vector<double> values;
};

// "start:stop:step", endpoints inclusive within half a step
GridSpec parse_grid(const std::string& spec) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.step) || c1 != ':' || c2 != ':' ||
        !(in >> std::ws).eof())
        throw std::domain_error("grid must be start:stop:step, got '" + spec + "'");
    if (!(g.step > 0.0)) throw std::domain_error("grid step must be positive");
    if (g.stop < g.start) throw std::domain_error("grid stop must be >= start");
    const int count = static_cast<int>(std::floor((g.stop - g.start) / g.step + 0.5)) + 1;
    for (int i = 0; i < count; ++i) g.values.push_back(g.start + i * g.step);
    return g;
}

// One bag of flags for every subcommand; each dispatch validates the slice
// it uses and embeds it in the output header.
struct RunConfig {
    std::string subcommand;
    int n = 20;
    int nu = 0;
    double tau = 0.5;
    std::string regime = "interpolating";
    double sigma = 1.0;
    double sigma_hat = 1.0;
    std::string family = "finite";
    std::string xi = "";
    std::string eta = "0:0:1";
    std::string t = "";
    int trials = 100;
    std::uint64_t master_seed = 1;
    std::uint64_t trial = 0;
    int threads = 0;
    std::string suite = "orthogonality";
    int nu_max = 3;
    int jk_max = 8;
    double tol = 0.0;  // 0 = suite default
    std::string experiment = "last-particle";
    std::string ks_against = "none";
    double window = 4.0;
    int bins = 0;
    double xi0 = 0.0, xi1 = 1.0, eta0 = -1.0, eta1 = 1.0;
    int m_xi = 48, m_eta = 24;
    double L = 12.0, H = 0.0;
    std::string output;
    std::string format = "csv";
};

void emit(const RunConfig& rc, const std::string& text) {
    if (rc.output.empty()) {
        std::cout << text;
        return;
    }
    std::string path = rc.output;
    const char* dir = std::getenv("CHIREDGE_OUT_DIR");
    if (dir && *dir && path.front() != '/') path = std::string(dir) + "/" + path;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file " + path);
    f << text;
}

ens::Regime parse_regime(const std::string& r) {
    if (r == "interpolating") return ens::Regime::interpolating;
    if (r == "gumbel") return ens::Regime::gumbel;
    throw std::domain_error("regime must be interpolating or gumbel");
}

chiredge::stats::Experiment make_experiment(const RunConfig& rc) {
    chiredge::stats::Experiment e;
    e.params = {rc.n, rc.nu, rc.tau};
    e.regime = parse_regime(rc.regime);
    e.trials = rc.trials;
    e.master_seed = rc.master_seed;
    e.threads = rc.threads;
    return e;
}

int run_sample(const RunConfig& rc) {
    const auto ev = ens::eigenvalues(
        ens::sample_dirac({rc.n, rc.nu, rc.tau}, rc.master_seed, rc.trial));
    std::ostringstream out;
    if (rc.format == "json")
        out << chiredge::io::eigenvalues_json(ev).dump(2) << "\n";
    else
        chiredge::io::write_eigenvalues_csv(out, ev);
    emit(rc, out.str());
    return 0;
}

int run_kernel(const RunConfig& rc) {
    const GridSpec gx = parse_grid(rc.xi);
    const GridSpec ge = parse_grid(rc.eta);
    json config{{"kind", "kernel"},        {"family", rc.family},
                {"xi", rc.xi},             {"eta", rc.eta},
                {"master_seed", rc.master_seed}};
    std::vector<std::vector<double>> rows;
    for (const double x : gx.values)
        for (const double y : ge.values) {
            const cplx zeta(x, y);
            double value = 0.0;
            if (rc.family == "finite") {
                config["n"] = rc.n;
                config["nu"] = rc.nu;
                config["tau"] = rc.tau;
                value = chiredge::finite::density_finite({rc.n, rc.nu, rc.tau}, zeta);
            } else if (rc.family == "airy") {
                config["sigma"] = rc.sigma;
                value = chiredge::limit::kernel_airy_interp(zeta, zeta, rc.sigma)
                            .value()
                            .real();
            } else if (rc.family == "sine") {
                config["sigma_hat"] = rc.sigma_hat;
                value = chiredge::limit::kernel_sine_interp(zeta, zeta, rc.sigma_hat).real();
            } else if (rc.family == "bessel") {
                config["sigma_hat"] = rc.sigma_hat;
                config["nu"] = rc.nu;
                value =
                    chiredge::limit::kernel_bessel_interp(zeta, zeta, rc.sigma_hat, rc.nu)
                        .real();
            } else {
                throw std::domain_error("family must be finite, airy, sine, or bessel");
            }
            rows.push_back({x, y, value});
        }
    std::ostringstream out;
    chiredge::io::write_grid_csv(out, config, {"xi", "eta", "value"}, rows);
    emit(rc, out.str());
    return 0;
}

int run_fredholm(const RunConfig& rc) {
    const GridSpec gt = parse_grid(rc.t);
    chiredge::fredholm::FredholmConfig cfg;
    cfg.m_xi = rc.m_xi;
    cfg.m_eta = rc.m_eta;
    cfg.L = rc.L;
    cfg.H = rc.H;
    const auto table =
        chiredge::fredholm::cdf_table(rc.sigma, gt.start, gt.stop, gt.step, cfg);
    json config{{"kind", "fredholm"}, {"sigma", rc.sigma}, {"t", rc.t},
                {"m_xi", cfg.m_xi},   {"m_eta", cfg.m_eta}, {"L", cfg.L},
                {"H", cfg.H},         {"master_seed", rc.master_seed}};
    std::ostringstream out;
    if (rc.format == "json") {
        json j{{"config", config},
               {"t", table.t},
               {"F_sigma", table.F},
               {"error_estimate", table.err}};
        out << j.dump(2) << "\n";
    } else {
        chiredge::io::write_cdf_csv(out, config, table);
    }
    emit(rc, out.str());
    return 0;
}

json orthogonality_report(int jk_max, int nu_max, double tol) {
    const auto rep = chiredge::finite::verify_orthogonality(jk_max, nu_max, 2.0, 1.0, tol);
    json cases = json::array();
    for (const auto& e : rep.entries)
        cases.push_back({{"nu", e.nu},
                         {"j", e.j},
                         {"k", e.k},
                         {"residual", e.residual}});
    return json{{"suite", "orthogonality"}, {"a", rep.a},     {"b", rep.b},
                {"jk_max", rep.max_j},      {"nu_max", rep.nu_max},
                {"tol", rep.tol},           {"cases", cases},
                {"max_residual", rep.max_residual}, {"pass", rep.pass}};
}

json contour_report(int nu_max, double tol) {
    chiredge::GaussStream g(chiredge::stream_seed(11, 0));
    json cases = json::array();
    double worst = 0.0;
    for (const int n : {4, 8, 12, 16, 20}) {
        for (int nu = 0; nu <= std::min(nu_max, 3); ++nu) {
            for (const double tau : {0.3, 0.5, 0.7, 0.9}) {
                const ens::EnsembleParams p{n, nu, tau};
                const double edge = 1.0 + tau;
                for (int rep = 0; rep < 10; ++rep) {
                    const cplx z1 = edge * cplx(1.0 + 0.1 * (g.uniform() - 0.5),
                                                0.1 * (g.uniform() - 0.5));
                    const cplx z2 = edge * cplx(1.0 + 0.1 * (g.uniform() - 0.5),
                                                0.1 * (g.uniform() - 0.5));
                    const auto direct = chiredge::finite::kernel_finite(p, z1, z2);
                    const auto contour = chiredge::finite::kernel_contour(p, z1, z2);
                    const double residual = std::abs((contour / direct).value() - 1.0);
                    worst = std::max(worst, residual);
                    cases.push_back({{"n", n}, {"nu", nu}, {"tau", tau},
                                     {"residual", residual}});
                }
            }
        }
    }
    return json{{"suite", "contour"}, {"tol", tol},           {"cases", cases},
                {"max_residual", worst}, {"pass", worst <= tol}};
}

json interp_report(double tol) {
    json cases = json::array();
    double worst = 0.0;
    for (const double sigma : {0.25, 0.5, 1.0, 2.0}) {
        for (const double re : {-1.0, 0.0, 1.0}) {
            for (const double im : {-0.5, 0.5}) {
                const cplx z1(re, im);
                const cplx z2(0.3 - re, -im);
                const auto real_rep =
                    chiredge::limit::kernel_airy_interp_real(z1, z2, sigma);
                const auto contour =
                    chiredge::limit::kernel_airy_interp_contour(z1, z2, sigma);
                const double residual =
                    std::abs((contour.value / real_rep.value).value() - 1.0);
                worst = std::max(worst, residual);
                cases.push_back({{"sigma", sigma},
                                 {"zeta1", {re, im}},
                                 {"zeta2", {0.3 - re, -im}},
                                 {"residual", residual}});
            }
        }
    }
    return json{{"suite", "interp"}, {"tol", tol},           {"cases", cases},
                {"max_residual", worst}, {"pass", worst <= tol}};
}

int run_verify(const RunConfig& rc) {
    json report;
    if (rc.suite == "orthogonality") {
        report = orthogonality_report(rc.jk_max, rc.nu_max,
                                      rc.tol > 0.0 ? rc.tol : 1e-6);
    } else if (rc.suite == "contour") {
        report = contour_report(rc.nu_max, rc.tol > 0.0 ? rc.tol : 1e-8);
    } else if (rc.suite == "interp") {
        report = interp_report(rc.tol > 0.0 ? rc.tol : 1e-6);
    } else {
        throw std::domain_error("suite must be orthogonality, contour, or interp");
    }
    std::ostringstream out;
    out << report.dump(2) << "\n";
    emit(rc, out.str());
    return report["pass"].get<bool>() ? 0 : 2;
}

int run_mc(const RunConfig& rc) {
    const auto exp = make_experiment(rc);
    // threads is an execution knob, not part of the experiment: files must
    // be byte-identical for any cap, so it stays out of the metadata.
    json config{{"kind", "mc"},           {"experiment", rc.experiment},
                {"n", rc.n},              {"nu", rc.nu},
                {"tau", rc.tau},          {"regime", rc.regime},
                {"trials", rc.trials},    {"master_seed", rc.master_seed}};
    std::ostringstream out;
    if (rc.experiment == "last-particle") {
        const auto summary = chiredge::stats::mc_last_particle(exp);
        json report{{"config", config}, {"summary", chiredge::io::ecdf_json(summary)}};
        if (rc.ks_against == "gumbel") {
            report["ks_vs_reference"] = chiredge::stats::ks_statistic(
                summary.values, chiredge::fredholm::gumbel_cdf);
            report["reference"] = "gumbel";
        } else if (rc.ks_against == "fredholm") {
            const auto sp = ens::scaling_params(rc.n, rc.tau, exp.regime);
            chiredge::fredholm::FredholmConfig cfg;
            cfg.m_xi = 32;
            cfg.m_eta = 16;
            std::vector<double> ts, Fs;
            const double lo = std::floor(summary.values.front()) - 0.5;
            const double hi = std::ceil(summary.values.back()) + 0.5;
            for (double tv = lo; tv <= hi + 1e-9; tv += 0.25) {
                ts.push_back(tv);
                Fs.push_back(chiredge::fredholm::last_particle_cdf(sp.sigma, tv, cfg));
            }
            auto ref = [&](double x) {
                if (x <= ts.front()) return Fs.front();
                if (x >= ts.back()) return Fs.back();
                const auto it = std::upper_bound(ts.begin(), ts.end(), x);
                const std::size_t i = static_cast<std::size_t>(it - ts.begin());
                const double w = (x - ts[i - 1]) / (ts[i] - ts[i - 1]);
                return Fs[i - 1] + w * (Fs[i] - Fs[i - 1]);
            };
            report["ks_vs_reference"] =
                chiredge::stats::ks_statistic(summary.values, ref);
            report["reference"] = "fredholm sigma=" + chiredge::io::fmt(sp.sigma);
        } else if (rc.ks_against != "none") {
            throw std::domain_error("--ks-against must be gumbel, fredholm, or none");
        }
        if (rc.format == "csv") {
            std::vector<std::vector<double>> rows;
            for (const double v : summary.values) rows.push_back({v});
            chiredge::io::write_grid_csv(out, config, {"value"}, rows);
        } else {
            out << report.dump(2) << "\n";
        }
    } else if (rc.experiment == "density") {
        if (exp.regime != ens::Regime::interpolating)
            throw std::domain_error("density experiment runs in the interpolating regime");
        const auto h = chiredge::stats::edge_density_histogram(exp, rc.window, rc.bins);
        const auto sp = ens::scaling_params(rc.n, rc.tau, exp.regime);
        const double wf = std::sqrt(2.0 / (1.0 + rc.tau));
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < h.density.size(); ++i) {
            const double mid = 0.5 * (h.edges[i] + h.edges[i + 1]);
            const double limit =
                std::erfc(wf * mid / sp.sigma) / (M_PI * sp.sigma * (1.0 + rc.tau));
            rows.push_back({h.edges[i], h.edges[i + 1], h.density[i], limit});
        }
        config["window"] = rc.window;
        config["bins"] = rc.bins;
        chiredge::io::write_grid_csv(out, config,
                                     {"bin_lo", "bin_hi", "density", "erfc_limit"}, rows);
    } else if (rc.experiment == "poisson") {
        const auto rep =
            chiredge::stats::poisson_count_test(exp, rc.xi0, rc.xi1, rc.eta0, rc.eta1);
        json box{{"xi0", rc.xi0}, {"xi1", rc.xi1}, {"eta0", rc.eta0}, {"eta1", rc.eta1}};
        json report{{"config", config},
                    {"box", box},
                    {"mean", rep.mean},
                    {"variance", rep.variance},
                    {"expected_mean", rep.expected_mean},
                    {"degenerate", rep.degenerate},
                    {"counts", rep.counts}};
        if (!rep.degenerate) report["mean_variance_ratio"] = rep.mean / rep.variance;
        out << report.dump(2) << "\n";
    } else {
        throw std::domain_error("experiment must be last-particle, density, or poisson");
    }
    emit(rc, out.str());
    return 0;
}

int run_density(const RunConfig& rc) {
    const GridSpec gx = parse_grid(rc.xi);
    const ens::EnsembleParams p{rc.n, rc.nu, rc.tau};
    const double wf = std::sqrt(2.0 / (1.0 + rc.tau));
    json config{{"kind", "density"}, {"n", rc.n},   {"nu", rc.nu},
                {"tau", rc.tau},     {"xi", rc.xi}, {"master_seed", rc.master_seed}};
    std::vector<std::vector<double>> rows;
    for (const double x : gx.values) {
        const double profile =
            2.0 * M_PI * (1.0 + rc.tau) * chiredge::finite::density_finite(p, cplx(x, 0.0));
        rows.push_back({x, profile, std::erfc(x), std::erfc(wf * x)});
    }
    std::ostringstream out;
    chiredge::io::write_grid_csv(out, config,
                                 {"xi", "profile", "erfc", "erfc_width_corrected"}, rows);
    emit(rc, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    CLI::App app{"finite-n and limiting edge statistics of the chiral "
                 "non-hermitian two-matrix ensemble"};
    app.set_version_flag("--version", CHIREDGE_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", rc.threads,
                   "worker thread cap for monte carlo (0 = all cores)");

    auto* sample = app.add_subcommand("sample", "draw one trial and emit eigenvalues");
    sample->add_option("--n", rc.n, "matrix size")->required()->check(CLI::PositiveNumber);
    sample->add_option("--nu", rc.nu)->check(CLI::NonNegativeNumber);
    sample->add_option("--tau", rc.tau)->check(CLI::Range(0.0, 1.0));
    sample->add_option("--seed", rc.master_seed);
    sample->add_option("--trial", rc.trial);

    auto* kernel = app.add_subcommand("kernel", "kernel diagonal on a grid");
    kernel->add_option("--family", rc.family, "finite, airy, sine, or bessel");
    kernel->add_option("--n", rc.n)->check(CLI::PositiveNumber);
    kernel->add_option("--nu", rc.nu)->check(CLI::NonNegativeNumber);
    kernel->add_option("--tau", rc.tau)->check(CLI::Range(0.0, 1.0));
    kernel->add_option("--sigma", rc.sigma)->check(CLI::NonNegativeNumber);
    kernel->add_option("--sigma-hat", rc.sigma_hat);
    kernel->add_option("--xi", rc.xi, "grid start:stop:step")->required();
    kernel->add_option("--eta", rc.eta, "grid start:stop:step");

    auto* fred = app.add_subcommand("fredholm", "last-particle distribution table");
    fred->add_option("--sigma", rc.sigma)->required()->check(CLI::NonNegativeNumber);
    fred->add_option("--t", rc.t, "grid start:stop:step")->required();
    fred->add_option("--m-xi", rc.m_xi);
    fred->add_option("--m-eta", rc.m_eta);
    fred->add_option("--L", rc.L);
    fred->add_option("--H", rc.H);

    auto* verify = app.add_subcommand("verify", "cross-representation residual suites");
    verify->add_option("--suite", rc.suite, "orthogonality, contour, or interp")
        ->required();
    verify->add_option("--nu-max", rc.nu_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--jk-max", rc.jk_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", rc.tol, "override the suite default tolerance");

    auto* mc = app.add_subcommand("mc", "monte carlo experiments");
    mc->add_option("--experiment", rc.experiment,
                   "last-particle, density, or poisson")->required();
    mc->add_option("--n", rc.n)->required()->check(CLI::PositiveNumber);
    mc->add_option("--nu", rc.nu)->check(CLI::NonNegativeNumber);
    mc->add_option("--tau", rc.tau)->check(CLI::Range(0.0, 1.0));
    mc->add_option("--regime", rc.regime, "interpolating or gumbel");
    mc->add_option("--trials", rc.trials)->check(CLI::PositiveNumber);
    mc->add_option("--seed", rc.master_seed);
    mc->add_option("--ks-against", rc.ks_against, "gumbel, fredholm, or none");
    mc->add_option("--window", rc.window);
    mc->add_option("--bins", rc.bins)->check(CLI::NonNegativeNumber);
    mc->add_option("--xi0", rc.xi0);
    mc->add_option("--xi1", rc.xi1);
    mc->add_option("--eta0", rc.eta0);
    mc->add_option("--eta1", rc.eta1);

    auto* dens = app.add_subcommand("density", "finite-n edge profile vs erfc");
    dens->add_option("--n", rc.n)->required()->check(CLI::PositiveNumber);
    dens->add_option("--nu", rc.nu)->check(CLI::NonNegativeNumber);
    dens->add_option("--tau", rc.tau)->check(CLI::Range(0.0, 1.0));
    dens->add_option("--xi", rc.xi, "grid start:stop:step")->required();

    for (auto* sub : {sample, kernel, fred, verify, mc, dens}) {
        sub->add_option("-o,--output", rc.output, "output file (default stdout)");
        sub->add_option("--format", rc.format, "csv or json");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (sample->parsed()) return run_sample(rc);
        if (kernel->parsed()) return run_kernel(rc);
        if (fred->parsed()) return run_fredholm(rc);
        if (verify->parsed()) return run_verify(rc);
        if (mc->parsed()) return run_mc(rc);
        if (dens->parsed()) return run_density(rc);
        std::cerr << app.help() << std::flush;
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
}
