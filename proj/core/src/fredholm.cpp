#include "chiredge/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "chiredge/quadrature.hpp"
#include "chiredge/specfun.hpp"

namespace chiredge::fredholm {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

double auto_height(double sigma) { return 4.0 * std::sqrt(1.0 + sigma * sigma); }

double resolve_height(double sigma, const FredholmConfig& cfg) {
    if (cfg.H <= 0.0) return auto_height(sigma);
    if (cfg.H < auto_height(sigma) - 1e-12)
        throw std::domain_error(
            "fredholm: H must be at least 4 sqrt(1 + sigma^2), or <= 0 to pick it "
            "automatically; a shorter window truncates the eta mass");
    return cfg.H;
}

void validate(double sigma, const FredholmConfig& cfg) {
    if (!(sigma >= 0.0)) throw std::domain_error("fredholm: sigma must be >= 0");
    if (cfg.m_xi < 4 || cfg.m_eta < 4)
        throw std::domain_error("fredholm: need at least 4 quadrature nodes per direction");
    if (!(cfg.L >= 8.0)) throw std::domain_error("fredholm: xi window length L must be >= 8");
    resolve_height(sigma, cfg);
}

// det(I - K) restricted to {xi > t} x R. The half-line form of the kernel
// separates its two arguments through the integration variable s,
//
//   K(z1, z2) = e^{sigma^6/6} / sqrt(pi) * g(z1) conj(g(z2))
//               * int_0^inf e^{sigma^2 s} phi(z1, s) conj(phi(z2, s)) ds,
//   g(z)      = e^{-eta^2/2 + sigma^2 (xi + i sigma eta) / 2},
//   phi(z, s) = Ai(xi + i sigma eta + sigma^4/4 + s),
//
// so the weight-scaled Nystrom matrix is C C^H with C indexed by
// (space node, s node) and det(I - C C^H) = det(I - C^H C): the dense solve
// runs on the s quadrature instead of the m_xi * m_eta product grid. Each
// column of C is normalized by its peak log magnitude and the scale is
// restored analytically in the small matrix, which keeps the assembly finite
// at any sigma. At sigma = 0 the s integral is the classical Airy kernel and
// the eta direction integrates to rank one, so the value collapses to the
// one dimensional Tracy-Widom determinant.
double det_restricted(double sigma, double t, const FredholmConfig& cfg) {
    const double H = resolve_height(sigma, cfg);
    const QuadratureRule xi_rule = gauss_legendre(cfg.m_xi, t, t + cfg.L);
    const QuadratureRule eta_rule = gauss_legendre(cfg.m_eta, -H, H);

    const double s2 = sigma * sigma;
    const double s4 = s2 * s2;
    const double shift = 0.25 * s4;
    const double x_min = t + shift;
    const double s_max = std::max(30.0, 4.0 * s4) + 2.0 * std::max(0.0, -x_min) + 8.0;
    const QuadratureRule s_rule = halfline_rule(s_max, 0.5, 1.15, 24);

    const int n_space = cfg.m_xi * cfg.m_eta;
    const int n_s = static_cast<int>(s_rule.size());

    // spatial factors shared by every column
    std::vector<double> xi_of(n_space), im_of(n_space), log_g(n_space), arg_g(n_space);
    for (int a = 0, p = 0; a < cfg.m_xi; ++a) {
        const double xi = xi_rule.points[a].real();
        const double wa = xi_rule.weights[a].real();
        for (int b = 0; b < cfg.m_eta; ++b, ++p) {
            const double eta = eta_rule.points[b].real();
            const double vb = eta_rule.weights[b].real();
            xi_of[p] = xi + shift;
            im_of[p] = sigma * eta;
            log_g[p] = -0.5 * eta * eta + 0.5 * s2 * xi + 0.5 * std::log(wa * vb);
            arg_g[p] = 0.5 * s2 * sigma * eta;
        }
    }

    Eigen::MatrixXcd C(n_space, n_s);
    std::vector<double> col_scale(n_s, 0.0);
    const double shared = s2 * s4 / 12.0 - 0.25 * std::log(kPi);
    auto fill_columns = [&](int k0, int k1) {
        std::vector<double> la(n_space), ph(n_space);
        for (int k = k0; k < k1; ++k) {
            const double sk = s_rule.points[k].real();
            const double uk = s_rule.weights[k].real();
            const double base = 0.5 * s2 * sk + 0.5 * std::log(uk) + shared;
            double peak = -std::numeric_limits<double>::infinity();
            for (int p = 0; p < n_space; ++p) {
                const LogComplex ai = specfun::airy_ai_log(cplx(xi_of[p] + sk, im_of[p]));
                la[p] = ai.log_abs + log_g[p] + base;
                ph[p] = ai.phase + arg_g[p];
                peak = std::max(peak, la[p]);
            }
            if (!std::isfinite(peak)) {
                col_scale[k] = 0.0;
                C.col(k).setZero();
                continue;
            }
            col_scale[k] = peak;
            for (int p = 0; p < n_space; ++p)
                C(p, k) = std::polar(std::exp(la[p] - peak), ph[p]);
        }
    };
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    const int n_jobs = std::min(n_s, hw);
    if (n_jobs <= 1) {
        fill_columns(0, n_s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_jobs);
        for (int j = 0; j < n_jobs; ++j) {
            const int k0 = j * n_s / n_jobs;
            const int k1 = (j + 1) * n_s / n_jobs;
            pool.emplace_back(fill_columns, k0, k1);
        }
        for (auto& th : pool) th.join();
    }

    Eigen::MatrixXcd small = C.adjoint() * C;
    for (int k = 0; k < n_s; ++k)
        for (int l = 0; l < n_s; ++l) {
            const cplx s = small(k, l);
            const double mag = std::exp(col_scale[k] + col_scale[l] + std::log(std::abs(s)));
            small(k, l) = std::polar(mag, std::arg(s));
        }
    small = 0.5 * (small + small.adjoint()).eval();

    const Eigen::MatrixXcd resolvent = Eigen::MatrixXcd::Identity(n_s, n_s) - small;
    const cplx det = Eigen::PartialPivLU<Eigen::MatrixXcd>(resolvent).determinant();
    if (std::abs(det.imag()) > 1e-10 * std::max(1.0, std::abs(det.real())))
        throw std::runtime_error(
            "fredholm: determinant drifted off the real axis (imag " +
            std::to_string(det.imag()) + "); refine m_xi/m_eta");
    const double value = det.real();
    if (value < -1e-6 || value > 1.0 + 1e-6)
        throw std::runtime_error(
            "fredholm: determinant " + std::to_string(value) +
            " is outside [0, 1]; refine m_xi/m_eta or enlarge L/H");
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace

double last_particle_cdf(double sigma, double t, const FredholmConfig& cfg) {
    validate(sigma, cfg);
    return det_restricted(sigma, t, cfg);
}

double gumbel_cdf(double t) { return std::exp(-std::exp(-t)); }

CdfTable cdf_table(double sigma, double t0, double t1, double dt,
                   const FredholmConfig& cfg) {
    if (!(dt > 0.0)) throw std::domain_error("cdf_table: dt must be positive");
    if (!(t1 >= t0)) throw std::domain_error("cdf_table: need t1 >= t0");
    validate(sigma, cfg);

    FredholmConfig coarse = cfg;
    coarse.m_xi = std::max(4, cfg.m_xi / 2);
    coarse.m_eta = std::max(4, cfg.m_eta / 2);

    CdfTable out;
    out.sigma = sigma;
    const int count = static_cast<int>(std::floor((t1 - t0) / dt + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) {
        const double t = t0 + i * dt;
        const double fine = det_restricted(sigma, t, cfg);
        const double rough = det_restricted(sigma, t, coarse);
        out.t.push_back(t);
        out.F.push_back(fine);
        out.err.push_back(std::abs(fine - rough));
    }
    for (std::size_t i = 1; i < out.F.size(); ++i)
        if (out.F[i] < out.F[i - 1] - 1e-4)
            throw std::runtime_error(
                "cdf_table: non-monotone by more than 1e-4 near t = " +
                std::to_string(out.t[i]) + "; refine the quadrature");
    return out;
}

}  // namespace chiredge::fredholm
