#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "chiredge/ensemble.hpp"

namespace chiredge::stats {

// Monte Carlo experiment over independent ensemble draws. Trial k always
// uses the stream derived from (master_seed, k); threads only change who
// computes a trial, never its result.
struct Experiment {
    ensemble::EnsembleParams params;
    ensemble::Regime regime = ensemble::Regime::interpolating;
    std::uint64_t master_seed = 1;
    int trials = 100;
    int threads = 0;  // 0 = hardware_concurrency
};

struct EcdfSummary {
    std::vector<double> values;  // sorted, one per trial
    int trials = 0;
    double ecdf(double x) const;
};

// Rightmost rescaled particle max_k xi_k per trial.
EcdfSummary mc_last_particle(const Experiment& exp);

// sup_x |ECDF(x) - cdf(x)| over the sorted sample.
double ks_statistic(const std::vector<double>& sorted_values,
                    const std::function<double(double)>& cdf);

struct PoissonCounts {
    std::vector<int> counts;   // per trial, number of rescaled points in the box
    double mean = 0.0;
    double variance = 0.0;     // unbiased sample variance
    double expected_mean = 0.0;  // integral of the limiting intensity over the box
    bool degenerate = false;     // < 2 trials or zero variance: ratio undefined
};

// Counts rescaled eigenvalues in [xi0, xi1] x [eta0, eta1]; in the gumbel
// regime counts are asymptotically Poisson with intensity e^{-xi - eta^2}/sqrt(pi).
PoissonCounts poisson_count_test(const Experiment& exp, double xi0, double xi1,
                                 double eta0, double eta1);

struct Histogram {
    std::vector<double> edges;    // size bins+1
    std::vector<double> density;  // per-trial count density: integrates to mean count per trial
    int total = 0;                // points across all trials
    int trials = 0;
};

// Histogram of rescaled real parts with |xi| <= window, pooled across all
// trials. Only points with |eta| <= 1 enter, so the bins compare against the
// eta = 0 density profile. bins = 0 picks the Freedman-Diaconis count.
Histogram edge_density_histogram(const Experiment& exp, double window = 4.0,
                                 int bins = 0);

}  // namespace chiredge::stats
