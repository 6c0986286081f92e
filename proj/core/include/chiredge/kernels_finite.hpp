#pragma once

#include <complex>
#include <vector>

#include "chiredge/ensemble.hpp"
#include "chiredge/log_complex.hpp"

namespace chiredge::finite {

using cplx = std::complex<double>;

// Planar orthogonality weight |z|^nu e^{b Re z} K_nu(a |z|), parametrized so
// the polynomial argument scale c is locked to (a^2 - b^2)/(2b). The ensemble
// case is a = 2n/(1-tau^2), b = 2 tau n/(1-tau^2), c = n/tau.
struct WeightParams {
    double a = 2.0;
    double b = 1.0;
    int nu = 0;

    double c() const { return (a * a - b * b) / (2.0 * b); }

    static WeightParams from_ensemble(const ensemble::EnsembleParams& p);
};

// log of the n-dependent weight  |z|^{nu+1} exp(2 tau n Re z / (1-tau^2))
//                                K_nu(2 n |z| / (1-tau^2))   at z != 0.
double weight_log(const ensemble::EnsembleParams& p, cplx z);

// Eigenvalue density kernel at finite n. Arguments are the squared-variable
// coordinates zeta with Re zeta > 0 (the kernel vanishes off that half-plane,
// encoded as LogComplex::zero()). Evaluated as a Laguerre sum in log scale.
LogComplex kernel_finite(const ensemble::EnsembleParams& p, cplx zeta1, cplx zeta2);

// Same kernel through the two-contour representation of the truncated
// Laguerre sum: u on a circle of radius 0.7 tau^2 about 0 (encircling 0,
// keeping the pole at tau^2 v outside), v on |v| = 1.4 (encircling 1 and the
// u circle). Needs tau <= 0.9. m = points per circle.
LogComplex kernel_contour(const ensemble::EnsembleParams& p, cplx zeta1, cplx zeta2,
                          int m = 512);

// Edge density profile rho_n(zeta) = (1-tau)/(2n) * K_n(z, z) at
// z = (1+tau) + sqrt((1-tau)/(2n)) zeta; approaches erfc(xi)/(2 pi (1+tau)).
double density_finite(const ensemble::EnsembleParams& p, cplx zeta);

// Closed-form squared norm h_j^nu = pi (j+nu)! / (a j!) (a/b)^{2j}
//                                   (2a/(a^2-b^2))^{nu+1}.
double norm_h(int j, int nu, double a, double b);

struct OrthogonalityEntry {
    int nu = 0;
    int j = 0;
    int k = 0;
    cplx inner;        // quadrature value of <L_j, L_k>
    double expected;   // h_j^nu delta_jk
    double residual;   // |inner - expected| / max(h_j, h_k)
};

struct OrthogonalityReport {
    int max_j = 0;
    int nu_max = 0;
    double a = 2.0;
    double b = 1.0;
    double tol = 1e-6;
    double max_residual = 0.0;
    bool pass = false;
    std::vector<OrthogonalityEntry> entries;
};

// Checks <L_j^nu(c z), L_k^nu(c conj z)> against h_j^nu delta_jk for all
// j, k <= max_j and nu <= nu_max by polar quadrature (radial Gauss-Legendre
// panels graded toward 0, spectral trapezoid in the angle).
OrthogonalityReport verify_orthogonality(int max_j, int nu_max, double a, double b,
                                         double tol);

}  // namespace chiredge::finite
