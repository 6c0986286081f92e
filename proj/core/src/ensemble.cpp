#include "chiredge/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chiredge/rng.hpp"

namespace chiredge::ensemble {

namespace {

constexpr double kTwoPi = 6.283185307179586;

void validate(const EnsembleParams& p) {
    if (p.n < 1 || p.nu < 0 || !(p.tau >= 0.0 && p.tau <= 1.0))
        throw std::domain_error("ensemble: need n >= 1, nu >= 0, tau in [0, 1]");
}

void fill_gaussian(Eigen::MatrixXcd& m, GaussStream& g, double scale) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            double re = g.normal();
            double im = g.normal();
            m(i, j) = cplx(re * scale, im * scale);
        }
}

}  // namespace

DiracSample sample_dirac(const EnsembleParams& params, std::uint64_t master_seed,
                         std::uint64_t trial) {
    validate(params);
    DiracSample s;
    s.params = params;
    s.master_seed = master_seed;
    s.trial = trial;
    const int rows = params.n, cols = params.n + params.nu;
    GaussStream g(stream_seed(master_seed, trial));
    // density prop. to exp(-2n tr PP^H): each real component has variance
    // 1/(4n), so E|P_ij|^2 = 1/(2n); this puts the right spectral edge at 1+tau
    const double scale = 1.0 / std::sqrt(4.0 * params.n);
    s.P.resize(rows, cols);
    s.Q.resize(rows, cols);
    fill_gaussian(s.P, g, scale);  // row-major fill order, P before Q
    fill_gaussian(s.Q, g, scale);
    return s;
}

Eigen::MatrixXcd phi_matrix(const DiracSample& s) {
    double tau = s.params.tau;
    return std::sqrt(1.0 + tau) * s.P + std::sqrt(1.0 - tau) * s.Q;
}

Eigen::MatrixXcd psi_matrix(const DiracSample& s) {
    double tau = s.params.tau;
    return (std::sqrt(1.0 + tau) * s.P - std::sqrt(1.0 - tau) * s.Q).adjoint();
}

Eigen::MatrixXcd dirac_matrix(const DiracSample& s) {
    const int n = s.params.n, m = 2 * s.params.n + s.params.nu;
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(m, m);
    d.block(0, n, n, m - n) = phi_matrix(s);
    d.block(n, 0, m - n, n) = psi_matrix(s);
    return d;
}

EigenvalueSample eigenvalues(const DiracSample& s) {
    Eigen::MatrixXcd w = phi_matrix(s) * psi_matrix(s);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(w, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: QR iteration did not converge at n = " +
                                 std::to_string(s.params.n));

    EigenvalueSample out;
    out.params = s.params;
    out.master_seed = s.master_seed;
    out.trial = s.trial;
    out.z.reserve(s.params.n);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        cplx z = std::sqrt(es.eigenvalues()(k));  // principal branch, Re >= 0
        if (z.real() == 0.0 && z.imag() < 0.0) z = -z;
        if (z.real() == 0.0) z = cplx(0.0, z.imag());  // normalize -0.0
        out.z.push_back(z);
    }
    std::sort(out.z.begin(), out.z.end(), [](cplx l, cplx r) {
        if (l.real() != r.real()) return l.real() > r.real();
        return l.imag() < r.imag();
    });
    return out;
}

ScalingParams scaling_params(int n, double tau, Regime regime) {
    if (n < 1 || !(tau >= 0.0 && tau <= 1.0))
        throw std::domain_error("scaling_params: need n >= 1 and tau in [0, 1]");
    double nn = 2.0 * double(n);
    double sigma = std::pow(nn, 1.0 / 6.0) * std::sqrt(1.0 - tau);

    ScalingParams sp;
    sp.regime = regime;
    sp.sigma = sigma;
    if (regime == Regime::interpolating) {
        sp.a = std::pow(nn, -2.0 / 3.0);
        sp.b = sigma * sp.a;
        sp.c = 1.0 + tau;
        return sp;
    }

    if (!(sigma > 1.0))
        throw std::domain_error(
            "scaling_params: gumbel regime needs sigma_n > 1 so log sigma_n is "
            "positive; got sigma_n = " +
            std::to_string(sigma));
    double that = (1.0 + tau) / 2.0;
    double logs = std::log(sigma);
    double lsix = 6.0 * logs;
    double scale = std::pow(nn, -2.0 / 3.0);
    sp.a = std::sqrt(that) * sigma / std::sqrt(lsix) * scale;
    sp.b = std::pow(that, -0.25) * std::pow(sigma, 2.5) / std::pow(lsix, 0.25) * scale;
    sp.c = (1.0 + tau) + sp.a * (3.0 * logs - 1.25 * std::log(lsix) -
                                 std::log(kTwoPi * std::pow(that, 0.75)));
    return sp;
}

std::vector<cplx> rescale(const EigenvalueSample& s, const ScalingParams& sp) {
    if (!(sp.b > 0.0))
        throw std::domain_error(
            "rescale: b == 0 leaves no imaginary scale (Hermitian limit); work "
            "with the raw spectrum instead");
    std::vector<cplx> out;
    out.reserve(s.z.size());
    for (cplx z : s.z)
        out.emplace_back((z.real() - sp.c) / sp.a, z.imag() / sp.b);
    return out;
}

}  // namespace chiredge::ensemble
