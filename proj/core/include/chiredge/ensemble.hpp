#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace chiredge::ensemble {

using cplx = std::complex<double>;

// Chiral two-matrix ensemble: P, Q are independent n x (n+nu) complex
// Gaussian matrices drawn from exp(-2n tr(PP^H + QQ^H)), i.e. each real
// component has variance 1/(4n) and E|P_ij|^2 = 1/(2n); tau in [0, 1]
// couples them.
struct EnsembleParams {
    int n = 1;
    int nu = 0;
    double tau = 0.5;
};

struct DiracSample {
    EnsembleParams params;
    std::uint64_t master_seed = 0;
    std::uint64_t trial = 0;
    Eigen::MatrixXcd P;  // n x (n+nu)
    Eigen::MatrixXcd Q;  // n x (n+nu)
};

// Nonzero Dirac eigenvalues come in pairs +/- z_k; z holds the n
// representatives with Re z >= 0 (ties broken toward Im z >= 0), sorted by
// descending real part, ties by ascending imaginary part. nu exact zero
// modes are implicit.
struct EigenvalueSample {
    EnsembleParams params;
    std::uint64_t master_seed = 0;
    std::uint64_t trial = 0;
    std::vector<cplx> z;
};

enum class Regime {
    interpolating,  // edge window where Tracy-Widom deforms toward Gumbel
    gumbel,         // strong non-Hermiticity scaling for the rightmost particle
};

// Affine change of variables z = c + a*xi + i*b*eta applied to eigenvalues
// near the right edge. sigma = (2n)^(1/6) sqrt(1 - tau) controls the regime.
struct ScalingParams {
    Regime regime = Regime::interpolating;
    double sigma = 0.0;
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

DiracSample sample_dirac(const EnsembleParams& params, std::uint64_t master_seed,
                         std::uint64_t trial);

// Phi = sqrt(1+tau) P + sqrt(1-tau) Q, Psi = sqrt(1+tau) P^H - sqrt(1-tau) Q^H.
Eigen::MatrixXcd phi_matrix(const DiracSample& s);
Eigen::MatrixXcd psi_matrix(const DiracSample& s);

// Full (2n+nu) x (2n+nu) off-diagonal block matrix [[0, Phi], [Psi, 0]].
Eigen::MatrixXcd dirac_matrix(const DiracSample& s);

// z_k = principal square roots of the spectrum of Phi Psi (n x n).
EigenvalueSample eigenvalues(const DiracSample& s);

// Throws std::domain_error outside the regime's validity range
// (gumbel needs sigma > 1 so the iterated logarithms are defined).
ScalingParams scaling_params(int n, double tau, Regime regime);

// Maps each z to xi + i*eta with xi = (Re z - c)/a, eta = Im z / b.
// Throws std::domain_error when b == 0 (Hermitian limit has no imaginary
// scale; handle tau == 1 spectra directly instead).
std::vector<cplx> rescale(const EigenvalueSample& s, const ScalingParams& sp);

}  // namespace chiredge::ensemble
