#include "chiredge/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chiredge::stats {

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

ensemble::ScalingParams recompute_scaling(const Experiment& exp) {
    return ensemble::scaling_params(exp.params.n, exp.params.tau, exp.regime);
}

// Runs fn(trial) for every trial index. Work is split into contiguous blocks
// across the experiment's thread budget; trial k's stream depends only on
// (master_seed, k), so the partition never shows up in the results. The
// first failure wins and is rethrown with its trial index.
template <typename Fn>
void for_each_trial(const Experiment& exp, Fn&& fn) {
    const int trials = exp.trials;
    const int workers = std::min(resolve_threads(exp.threads), trials);
    std::mutex fail_mutex;
    std::atomic<bool> failed{false};
    long long bad_trial = -1;
    std::string bad_what;
    auto run_block = [&](int lo, int hi) {
        for (int k = lo; k < hi && !failed.load(std::memory_order_relaxed); ++k) {
            try {
                fn(k);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (bad_trial < 0 || k < bad_trial) {
                    bad_trial = k;
                    bad_what = e.what();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    if (workers <= 1) {
        run_block(0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int j = 0; j < workers; ++j)
            pool.emplace_back(run_block, j * trials / workers,
                              (j + 1) * trials / workers);
        for (auto& th : pool) th.join();
    }
    if (bad_trial >= 0)
        throw std::runtime_error("trial " + std::to_string(bad_trial) + ": " + bad_what);
}

std::vector<ensemble::cplx> rescaled_trial(const Experiment& exp,
                                           const ensemble::ScalingParams& sp,
                                           int trial) {
    const auto sample = ensemble::sample_dirac(exp.params, exp.master_seed,
                                               static_cast<std::uint64_t>(trial));
    return ensemble::rescale(ensemble::eigenvalues(sample), sp);
}

void validate(const Experiment& exp) {
    if (exp.trials < 1) throw std::domain_error("stats: trials must be >= 1");
}

}  // namespace

double EcdfSummary::ecdf(double x) const {
    if (values.empty()) return 0.0;
    const auto it = std::upper_bound(values.begin(), values.end(), x);
    return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
}

EcdfSummary mc_last_particle(const Experiment& exp) {
    validate(exp);
    const auto sp = recompute_scaling(exp);
    std::vector<double> out(exp.trials);
    for_each_trial(exp, [&](int k) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& z : rescaled_trial(exp, sp, k)) best = std::max(best, z.real());
        out[static_cast<std::size_t>(k)] = best;
    });
    std::sort(out.begin(), out.end());
    EcdfSummary summary;
    summary.values = std::move(out);
    summary.trials = exp.trials;
    return summary;
}

double ks_statistic(const std::vector<double>& sorted_values,
                    const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_values.size();
    if (n == 0) throw std::domain_error("ks_statistic: need at least one sample");
    if (!std::is_sorted(sorted_values.begin(), sorted_values.end()))
        throw std::invalid_argument("ks_statistic: samples must be sorted");
    // exact sup of |ECDF - F| for continuous F: at jump point i the ECDF
    // passes from i/n to (i+1)/n, so both one-sided gaps are checked
    double d = 0.0;
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_values[i]);
        d = std::max(d, static_cast<double>(i + 1) / dn - f);
        d = std::max(d, f - static_cast<double>(i) / dn);
    }
    return d;
}

PoissonCounts poisson_count_test(const Experiment& exp, double xi0, double xi1,
                                 double eta0, double eta1) {
    validate(exp);
    if (exp.regime != ensemble::Regime::gumbel)
        throw std::domain_error(
            "poisson_count_test: the intensity e^{-xi-eta^2}/sqrt(pi) is the gumbel "
            "regime limit; run a gumbel experiment");
    if (!(xi1 > xi0) || !(eta1 > eta0))
        throw std::domain_error("poisson_count_test: box must have positive extent");

    const auto sp = recompute_scaling(exp);
    PoissonCounts report;
    report.counts.assign(exp.trials, 0);
    for_each_trial(exp, [&](int k) {
        int c = 0;
        for (const auto& z : rescaled_trial(exp, sp, k)) {
            if (z.real() >= xi0 && z.real() <= xi1 && z.imag() >= eta0 &&
                z.imag() <= eta1)
                ++c;
        }
        report.counts[static_cast<std::size_t>(k)] = c;
    });

    double sum = 0.0;
    for (int c : report.counts) sum += c;
    report.mean = sum / exp.trials;
    if (exp.trials > 1) {
        double ss = 0.0;
        for (int c : report.counts) ss += (c - report.mean) * (c - report.mean);
        report.variance = ss / (exp.trials - 1);
    }
    report.expected_mean =
        (std::exp(-xi0) - std::exp(-xi1)) * 0.5 * (std::erf(eta1) - std::erf(eta0));
    report.degenerate = exp.trials < 2 || report.variance == 0.0;
    return report;
}

Histogram edge_density_histogram(const Experiment& exp, double window, int bins) {
    validate(exp);
    if (!(window > 0.0)) throw std::domain_error("edge_density_histogram: window must be positive");
    if (bins < 0) throw std::domain_error("edge_density_histogram: bins must be >= 0");

    const auto sp = recompute_scaling(exp);
    std::vector<std::vector<double>> per_trial(exp.trials);
    for_each_trial(exp, [&](int k) {
        auto& mine = per_trial[static_cast<std::size_t>(k)];
        for (const auto& z : rescaled_trial(exp, sp, k)) {
            if (std::abs(z.real()) <= window && std::abs(z.imag()) <= 1.0)
                mine.push_back(z.real());
        }
    });
    std::vector<double> pooled;
    for (const auto& mine : per_trial) pooled.insert(pooled.end(), mine.begin(), mine.end());
    std::sort(pooled.begin(), pooled.end());

    int nb = bins;
    if (nb == 0) {
        // Freedman-Diaconis on the pooled sample; degenerate spreads fall
        // back to a single bin
        nb = 1;
        const std::size_t n = pooled.size();
        if (n >= 4) {
            const double iqr = pooled[(3 * n) / 4] - pooled[n / 4];
            const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
            if (width > 0.0)
                nb = std::min(512, std::max(4, static_cast<int>(std::ceil(2.0 * window / width))));
        }
    }

    Histogram h;
    h.trials = exp.trials;
    h.total = static_cast<int>(pooled.size());
    h.edges.resize(nb + 1);
    for (int i = 0; i <= nb; ++i)
        h.edges[static_cast<std::size_t>(i)] = -window + 2.0 * window * i / nb;
    h.density.assign(nb, 0.0);
    const double bin_width = 2.0 * window / nb;
    for (double x : pooled) {
        int idx = static_cast<int>((x + window) / bin_width);
        idx = std::clamp(idx, 0, nb - 1);
        h.density[static_cast<std::size_t>(idx)] += 1.0;
    }
    for (double& d : h.density) d /= exp.trials * bin_width;
    return h;
}

}  // namespace chiredge::stats
