#pragma once

#include <vector>

namespace chiredge::fredholm {

// Nystrom discretization of the last-particle operator: xi on [t, t+L]
// (Gauss-Legendre, m_xi nodes), eta on [-H, H] (m_eta nodes). H <= 0 means
// "pick 4 sqrt(1 + sigma^2)". The half-line factorization of the kernel
// turns det(I - K) into a small Hermitian determinant indexed by the
// t-quadrature, so m_xi * m_eta never meets an O(N^3) solve.
struct FredholmConfig {
    int m_xi = 48;
    int m_eta = 24;
    double L = 12.0;
    double H = 0.0;
};

// F_sigma(t) = P[no particle of the interpolating edge process has xi > t]
//            = det(I - K) on {xi > t} x R. sigma >= 0; sigma = 0 reproduces
// the Tracy-Widom GUE law.
double last_particle_cdf(double sigma, double t, const FredholmConfig& cfg = {});

// Gumbel law e^{-e^{-t}}.
double gumbel_cdf(double t);

struct CdfTable {
    double sigma = 0.0;
    std::vector<double> t;
    std::vector<double> F;
    std::vector<double> err;  // |F - F_coarse|, coarse = half the nodes in each direction
};

// Tabulates F_sigma on t0, t0+dt, ..., <= t1. Monotone in t up to quadrature
// error; err column is a self-convergence estimate.
CdfTable cdf_table(double sigma, double t0, double t1, double dt,
                   const FredholmConfig& cfg = {});

}  // namespace chiredge::fredholm
