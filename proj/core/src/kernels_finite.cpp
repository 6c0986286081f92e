#include "chiredge/kernels_finite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chiredge/quadrature.hpp"
#include "chiredge/specfun.hpp"

namespace chiredge::finite {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_tau_open(double tau, const char* who) {
    if (!(tau > 0.0 && tau < 1.0))
        throw std::domain_error(std::string(who) + ": needs tau in (0, 1)");
}

// log of the kernel prefactor 8 n^{2+nu} / (pi (1-tau^2)) sqrt(w(z1^2) w(z2^2))
double kernel_prefactor_log(const ensemble::EnsembleParams& p, cplx z1, cplx z2) {
    double d = 1.0 - p.tau * p.tau;
    return std::log(8.0) + (2.0 + p.nu) * std::log(double(p.n)) - std::log(kPi) -
           std::log(d) +
           0.5 * (weight_log(p, z1 * z1) + weight_log(p, z2 * z2));
}

}  // namespace

WeightParams WeightParams::from_ensemble(const ensemble::EnsembleParams& p) {
    require_tau_open(p.tau, "WeightParams");
    double d = 1.0 - p.tau * p.tau;
    WeightParams wp;
    wp.a = 2.0 * p.n / d;
    wp.b = 2.0 * p.tau * p.n / d;
    wp.nu = p.nu;
    return wp;
}

double weight_log(const ensemble::EnsembleParams& p, cplx z) {
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("weight_log: K_nu is singular at z = 0");
    double d = 1.0 - p.tau * p.tau;
    if (!(d > 0.0)) throw std::domain_error("weight_log: needs tau < 1");
    double az = std::abs(z);
    return (p.nu + 1.0) * std::log(az) + 2.0 * p.tau * p.n * z.real() / d +
           specfun::bessel_k_log(p.nu, 2.0 * p.n * az / d);
}

LogComplex kernel_finite(const ensemble::EnsembleParams& p, cplx zeta1, cplx zeta2) {
    require_tau_open(p.tau, "kernel_finite");
    if (zeta1 == cplx(0.0, 0.0) || zeta2 == cplx(0.0, 0.0))
        throw std::domain_error("kernel_finite: zeta = 0 hits the weight singularity");
    if (!(zeta1.real() > 0.0) || !(zeta2.real() > 0.0)) return LogComplex::zero();

    const int n = p.n, nu = p.nu;
    const double tau = p.tau;
    auto l1 = specfun::laguerre_seq_log(n, nu, double(n) * zeta1 * zeta1 / tau);
    auto l2 = specfun::laguerre_seq_log(
        n, nu, double(n) * std::conj(zeta2) * std::conj(zeta2) / tau);

    const double logtau2 = 2.0 * std::log(tau);
    LogComplexSum sum;
    for (int k = 0; k < n; ++k) {
        double coef = k * logtau2 + std::lgamma(k + 1.0) - std::lgamma(k + nu + 1.0);
        sum.add(l1[k] * l2[k] * LogComplex(coef, 0.0));
    }
    return LogComplex(kernel_prefactor_log(p, zeta1, zeta2), 0.0) * sum.total();
}

LogComplex kernel_contour(const ensemble::EnsembleParams& p, cplx zeta1, cplx zeta2,
                          int m) {
    if (p.tau > 0.9)
        throw std::invalid_argument("kernel_contour: needs tau <= 0.9");
    require_tau_open(p.tau, "kernel_contour");
    if (zeta1 == cplx(0.0, 0.0) || zeta2 == cplx(0.0, 0.0))
        throw std::domain_error("kernel_contour: zeta = 0 hits the weight singularity");
    if (!(zeta1.real() > 0.0) || !(zeta2.real() > 0.0)) return LogComplex::zero();

    const int n = p.n, nu = p.nu;
    const double tau = p.tau;
    const cplx z1 = double(n) * zeta1 * zeta1 / tau;
    const cplx z2 = double(n) * std::conj(zeta2) * std::conj(zeta2) / tau;

    // The u circle must exclude the coupling pole at u = tau^2 v (the sum
    // collapses to the wrong residue set otherwise), so its radius sits at
    // half of tau^2 R2. The v circle stays well clear of the essential
    // singularity at v = 1; that distance sets the trapezoid rate.
    const double R2 = 1.4;
    const double r1 = 0.5 * tau * tau * R2;
    QuadratureRule ur = circle_rule(r1, m);
    QuadratureRule vr = circle_rule(R2, m);

    // The integrand factorizes as A(u) B(v) / (tau^2 v - u); both factors span
    // extreme magnitudes, so build them in log form, then run the pair sum
    // rescaled against the joint peak.
    std::vector<LogComplex> la(m), lb(m);
    for (int i = 0; i < m; ++i) {
        cplx u = ur.points[i];
        cplx e = z1 * u / (u - 1.0);
        la[i] = LogComplex::from_complex(ur.weights[i]) *
                LogComplex::from_complex(u - 1.0).pow_int(nu - 1) *
                LogComplex::from_complex(u).pow_int(-(nu + n)) *
                LogComplex(e.real(), e.imag());
    }
    for (int j = 0; j < m; ++j) {
        cplx v = vr.points[j];
        cplx e = -z2 * v / (v - 1.0);
        lb[j] = LogComplex::from_complex(vr.weights[j]) *
                LogComplex::from_complex(v).pow_int(nu + n) *
                LogComplex::from_complex(v - 1.0).pow_int(-(nu + 1)) *
                LogComplex(e.real(), e.imag());
    }
    double sa = -1e300, sb = -1e300;
    for (int i = 0; i < m; ++i) sa = std::max(sa, la[i].log_abs);
    for (int j = 0; j < m; ++j) sb = std::max(sb, lb[j].log_abs);

    std::vector<cplx> ta(m), tb(m);
    for (int i = 0; i < m; ++i)
        ta[i] = LogComplex(la[i].log_abs - sa, la[i].phase).value();
    for (int j = 0; j < m; ++j)
        tb[j] = LogComplex(lb[j].log_abs - sb, lb[j].phase).value();

    const double t2 = tau * tau;
    cplx acc(0.0, 0.0);
    for (int j = 0; j < m; ++j) {
        cplx w = tb[j];
        cplx tv = t2 * vr.points[j];
        cplx inner(0.0, 0.0);
        for (int i = 0; i < m; ++i) inner += ta[i] / (tv - ur.points[i]);
        acc += w * inner;
    }

    LogComplex contour_sum = LogComplex::from_complex(acc) * LogComplex(sa + sb, 0.0);
    // tau^{2n} e^{z2} / (4 pi^2 z1^nu)
    LogComplex lemma_pref(2.0 * n * std::log(tau) + z2.real() -
                              std::log(4.0 * kPi * kPi) - nu * std::log(std::abs(z1)),
                          z2.imag() - double(nu) * std::arg(z1));
    return LogComplex(kernel_prefactor_log(p, zeta1, zeta2), 0.0) * lemma_pref *
           contour_sum;
}

double density_finite(const ensemble::EnsembleParams& p, cplx zeta) {
    require_tau_open(p.tau, "density_finite");
    cplx z = (1.0 + p.tau) + std::sqrt((1.0 - p.tau) / (2.0 * p.n)) * zeta;
    if (z == cplx(0.0, 0.0) || !(z.real() > 0.0)) return 0.0;
    LogComplex k = kernel_finite(p, z, z);
    if (k.is_zero()) return 0.0;
    double scale = std::log((1.0 - p.tau) / (2.0 * p.n));
    return std::exp(k.log_abs + scale) * std::cos(k.phase);
}

double norm_h(int j, int nu, double a, double b) {
    if (!(a > b && b > 0.0)) throw std::domain_error("norm_h: needs a > b > 0");
    double lh = std::log(kPi) - std::log(a) + std::lgamma(j + nu + 1.0) -
                std::lgamma(j + 1.0) + 2.0 * j * std::log(a / b) +
                (nu + 1.0) * std::log(2.0 * a / (a * a - b * b));
    return std::exp(lh);
}

OrthogonalityReport verify_orthogonality(int max_j, int nu_max, double a, double b,
                                         double tol) {
    if (!(a > b && b > 0.0))
        throw std::domain_error("verify_orthogonality: needs a > b > 0");
    OrthogonalityReport rep;
    rep.max_j = max_j;
    rep.nu_max = nu_max;
    rep.a = a;
    rep.b = b;
    rep.tol = tol;

    const int jn = max_j + 1;
    const double c = (a * a - b * b) / (2.0 * b);

    for (int nu = 0; nu <= nu_max; ++nu) {
        // Radial cutoff: the integrand is bounded by
        // (cR)^{2 max_j} R^{nu+1} e^{-(a-b)R}, pushed 60 e-folds below h_max.
        double hmax = norm_h(max_j, nu, a, b);
        double rcut = 10.0;
        auto tail_log = [&](double r) {
            return -(a - b) * r + 2.0 * max_j * std::log(std::max(1.0, c * r)) +
                   (nu + 1.0) * std::log(r);
        };
        while (tail_log(rcut) > std::log(hmax) - 60.0) rcut *= 1.1;

        int bandwidth = int(b * rcut + 2.0 * max_j + nu + 10.0);
        int mtheta = 128;
        while (mtheta < 2 * bandwidth + bandwidth / 2) mtheta *= 2;

        // radial panels: dyadic refinement toward the K_nu singularity at 0
        std::vector<double> edges{0.0};
        for (int k = 14; k >= 0; --k) edges.push_back(rcut * std::pow(0.5, k + 4));
        for (double r = edges.back(); r < rcut; r += rcut / 16.0)
            edges.push_back(std::min(rcut, r + rcut / 16.0));

        std::vector<double> xg, wg;
        gauss_legendre_reference(24, xg, wg);

        std::vector<std::vector<cplx>> gram(jn, std::vector<cplx>(jn, cplx(0.0, 0.0)));
        std::vector<cplx> lag(jn);
        const double dtheta = 2.0 * kPi / mtheta;

        for (size_t e = 0; e + 1 < edges.size(); ++e) {
            double mid = 0.5 * (edges[e] + edges[e + 1]);
            double half = 0.5 * (edges[e + 1] - edges[e]);
            if (half <= 0.0) continue;
            for (int q = 0; q < 24; ++q) {
                double r = mid + half * xg[q];
                // r-dependent part of the log-weight, reused across angles
                double wr = nu * std::log(r) + specfun::bessel_k_log(nu, a * r) +
                            std::log(half * wg[q] * r * dtheta);
                for (int t = 0; t < mtheta; ++t) {
                    double theta = t * dtheta;
                    cplx z = r * cplx(std::cos(theta), std::sin(theta));
                    double w = std::exp(wr + b * z.real());
                    cplx arg = c * z;
                    lag[0] = cplx(1.0, 0.0);
                    if (jn > 1) lag[1] = cplx(1.0 + nu, 0.0) - arg;
                    for (int j = 1; j + 1 < jn; ++j)
                        lag[j + 1] = ((cplx(2.0 * j + 1.0 + nu, 0.0) - arg) * lag[j] -
                                      cplx(double(j + nu), 0.0) * lag[j - 1]) /
                                     cplx(double(j + 1), 0.0);
                    for (int j = 0; j < jn; ++j)
                        for (int k = j; k < jn; ++k)
                            gram[j][k] += w * lag[j] * std::conj(lag[k]);
                }
            }
        }

        for (int j = 0; j < jn; ++j) {
            for (int k = 0; k < jn; ++k) {
                cplx inner = (k >= j) ? gram[j][k] : std::conj(gram[k][j]);
                double expected = (j == k) ? norm_h(j, nu, a, b) : 0.0;
                OrthogonalityEntry ent;
                ent.nu = nu;
                ent.j = j;
                ent.k = k;
                ent.inner = inner;
                ent.expected = expected;
                ent.residual = std::abs(inner - expected) /
                               std::max(norm_h(j, nu, a, b), norm_h(k, nu, a, b));
                rep.max_residual = std::max(rep.max_residual, ent.residual);
                rep.entries.push_back(ent);
            }
        }
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

}  // namespace chiredge::finite
