#include "chiredge/kernels_limit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiredge/quadrature.hpp"
#include "chiredge/specfun.hpp"

namespace chiredge::limit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One shifted line R + i delta. Nodes are symmetric about the imaginary
// axis; panel widths shrink where the cubic phase turns fast so that a
// 32-point panel never sees more than ~20 radians.
struct Line {
    std::vector<cplx> node;
    std::vector<cplx> factor;  // weight * exp(line exponent)
    double peak_re = -std::numeric_limits<double>::infinity();
    double edge_re = -std::numeric_limits<double>::infinity();
};

cplx line_exponent(cplx u, double sigma, cplx c) {
    return -0.5 * sigma * sigma * u * u + cplx(0.0, 1.0 / 3.0) * u * u * u +
           cplx(0.0, 1.0) * c * u;
}

Line build_line(cplx c, double sigma, double delta) {
    static thread_local std::vector<double> xg, wg;
    if (xg.empty()) gauss_legendre_reference(32, xg, wg);

    double g = delta + 0.5 * sigma * sigma;
    double tilt = std::fabs(c.imag());
    double cut = (tilt + std::sqrt(tilt * tilt + 144.0 * g)) / (2.0 * g);

    std::vector<double> edges{0.0};
    while (edges.back() < cut) {
        double x = edges.back();
        double w = std::min(0.5, 20.0 / (x * x + std::fabs(c.real()) + 4.0));
        edges.push_back(x + w);
    }

    Line line;
    line.node.reserve(2 * 32 * (edges.size() - 1));
    line.factor.reserve(line.node.capacity());
    for (int side : {-1, 1}) {
        for (size_t p = 0; p + 1 < edges.size(); ++p) {
            double half = 0.5 * (edges[p + 1] - edges[p]);
            double mid = 0.5 * (edges[p + 1] + edges[p]);
            for (int i = 0; i < 32; ++i) {
                cplx u(side * (mid + half * xg[i]), delta);
                cplx e = line_exponent(u, sigma, c);
                line.node.push_back(u);
                line.factor.push_back(half * wg[i] * std::exp(e));
                line.peak_re = std::max(line.peak_re, e.real());
            }
        }
    }
    for (int side : {-1, 1}) {
        cplx e = line_exponent(cplx(side * edges.back(), delta), sigma, c);
        line.edge_re = std::max(line.edge_re, e.real());
    }
    return line;
}

// Panels of a Gauss-Legendre rule on [0, 1], split when the Gaussian factor
// e^{-t^2 sh^2} is narrow.
QuadratureRule unit_rule(double sigma_hat) {
    int np = 1 + static_cast<int>(std::min(sigma_hat, 30.0));
    QuadratureRule rule;
    for (int p = 0; p < np; ++p) {
        QuadratureRule panel =
            gauss_legendre(48, double(p) / np, double(p + 1) / np);
        rule.points.insert(rule.points.end(), panel.points.begin(),
                           panel.points.end());
        rule.weights.insert(rule.weights.end(), panel.weights.begin(),
                            panel.weights.end());
    }
    return rule;
}

}  // namespace

HatKernelValue kernel_airy_interp_real(cplx zeta1, cplx zeta2, double sigma) {
    if (!(sigma > 0.0))
        throw std::domain_error(
            "kernel_airy_interp_real: sigma must be positive; the sigma = 0 "
            "limit is elementary, use kernel_airy_interp");
    double s2 = sigma * sigma;
    cplx a1 = zeta1 + 0.25 * s2 * s2;
    cplx a2 = std::conj(zeta2) + 0.25 * s2 * s2;
    double dip = std::min(a1.real(), a2.real());
    double t_max = std::max(30.0, 4.0 * s2 * s2) +
                   2.0 * std::max(0.0, -dip) + 8.0;
    QuadratureRule rule = halfline_rule(t_max, 0.5, 1.15, 24);

    LogComplexSum acc;
    for (size_t i = 0; i < rule.points.size(); ++i) {
        double t = rule.points[i].real();
        double w = rule.weights[i].real();
        acc.add(specfun::airy_ai_log(a1 + t) * specfun::airy_ai_log(a2 + t) *
                LogComplex(s2 * t + std::log(w), 0.0));
    }

    double e1 = zeta1.imag(), e2 = zeta2.imag();
    LogComplex pref(-(e1 * e1 + e2 * e2) / (2.0 * s2) + s2 * s2 * s2 / 6.0 +
                        0.5 * s2 * (zeta1.real() + zeta2.real()) -
                        std::log(sigma) - 0.5 * std::log(kPi),
                    0.5 * s2 * (e1 - e2));
    return {pref * acc.total(), AiryRep::real_integral};
}

HatKernelValue kernel_airy_interp_contour(cplx zeta1, cplx zeta2, double sigma,
                                          double delta) {
    if (!(delta > 0.0))
        throw std::domain_error(
            "kernel_airy_interp_contour: delta must be positive to keep the "
            "1/(u+v) pole off the lines");
    if (sigma < 0.0)
        throw std::domain_error("kernel_airy_interp_contour: sigma < 0");

    Line lu = build_line(zeta1, sigma, delta);
    Line lv = build_line(std::conj(zeta2), sigma, delta);
    double headroom = std::max(lu.edge_re - lu.peak_re, lv.edge_re - lv.peak_re);
    if (headroom > -20.0)
        throw std::runtime_error(
            "kernel_airy_interp_contour: truncation did not converge; "
            "edge-to-peak log ratio " +
            std::to_string(headroom));

    cplx acc(0.0, 0.0);
    for (size_t j = 0; j < lv.node.size(); ++j) {
        cplx inner(0.0, 0.0);
        for (size_t i = 0; i < lu.node.size(); ++i)
            inner += lu.factor[i] / (lu.node[i] + lv.node[j]);
        acc += lv.factor[j] * inner;
    }
    // the coupling factor is int_0^inf e^{it(u+v)} dt = i/(u+v) for
    // Im(u+v) > 0; this orientation keeps the diagonal positive and matches
    // the real representation
    acc *= cplx(0.0, 1.0);

    double lp = -std::log(4.0) - 2.5 * std::log(kPi);
    if (sigma > 0.0) {
        double e1 = zeta1.imag(), e2 = zeta2.imag();
        lp += -(e1 * e1 + e2 * e2) / (2.0 * sigma * sigma) - std::log(sigma);
    }
    return {LogComplex::from_complex(acc) * LogComplex(lp, 0.0),
            AiryRep::double_contour};
}

LogComplex kernel_airy_interp(cplx zeta1, cplx zeta2, double sigma) {
    if (sigma < 0.0) throw std::domain_error("kernel_airy_interp: sigma < 0");
    double e1 = zeta1.imag(), e2 = zeta2.imag();
    if (sigma == 0.0) {
        double k = kernel_airy(zeta1.real(), zeta2.real());
        return LogComplex::from_real(k) *
               LogComplex(-0.5 * (e1 * e1 + e2 * e2) - 0.5 * std::log(kPi),
                          0.0);
    }
    cplx h1(zeta1.real(), sigma * e1);
    cplx h2(zeta2.real(), sigma * e2);
    return LogComplex(std::log(sigma), 0.0) *
           kernel_airy_interp_real(h1, h2, sigma).value;
}

double kernel_airy(double x1, double x2) {
    double lo = std::min(x1, x2), hi = std::max(x1, x2);
    double t_max = 18.0 + 2.0 * std::max(0.0, -lo);
    QuadratureRule rule = halfline_rule(t_max, 0.25, 1.12, 24);
    double acc = 0.0;
    for (size_t i = 0; i < rule.points.size(); ++i) {
        double t = rule.points[i].real();
        acc += rule.weights[i].real() * specfun::airy_ai(lo + t) * specfun::airy_ai(hi + t);
    }
    return acc;
}

cplx kernel_sine_interp(cplx zeta1, cplx zeta2, double sigma_hat) {
    if (!(sigma_hat > 0.0))
        throw std::domain_error("kernel_sine_interp: sigma_hat must be positive");
    double sh2 = sigma_hat * sigma_hat;
    cplx d = zeta1 - std::conj(zeta2);
    QuadratureRule rule = unit_rule(sigma_hat);
    cplx acc(0.0, 0.0);
    for (size_t i = 0; i < rule.points.size(); ++i) {
        double t = rule.points[i].real();
        acc += rule.weights[i].real() * std::exp(-t * t * sh2) * std::cos(t * d);
    }
    double e1 = zeta1.imag(), e2 = zeta2.imag();
    double pref = std::exp(-(e1 * e1 + e2 * e2) / (2.0 * sh2)) /
                  (sigma_hat * std::pow(kPi, 1.5));
    return pref * acc;
}

cplx kernel_bessel_interp(cplx zeta1, cplx zeta2, double sigma_hat, int nu) {
    if (!(sigma_hat > 0.0))
        throw std::domain_error(
            "kernel_bessel_interp: sigma_hat must be positive");
    if (nu < 0) throw std::domain_error("kernel_bessel_interp: nu < 0");
    double r1 = std::abs(zeta1), r2 = std::abs(zeta2);
    if (r1 == 0.0 || r2 == 0.0)
        throw std::domain_error("kernel_bessel_interp: zero argument");

    double sh2 = sigma_hat * sigma_hat;
    cplx zc = std::conj(zeta2);
    QuadratureRule rule = unit_rule(sigma_hat);
    cplx acc(0.0, 0.0);
    for (size_t i = 0; i < rule.points.size(); ++i) {
        double t = rule.points[i].real();
        acc += rule.weights[i].real() * t * std::exp(-2.0 * t * t * sh2) *
               specfun::bessel_j(nu, t * zeta1) * specfun::bessel_j(nu, t * zc);
    }

    double x1 = zeta1.real(), x2 = zeta2.real();
    double lp = (nu + 1.0) * (std::log(r1) + std::log(r2)) -
                std::log(2.0 * kPi * sh2) +
                0.5 * (specfun::bessel_k_log(nu, r1 * r1 / (4.0 * sh2)) +
                       specfun::bessel_k_log(nu, r2 * r2 / (4.0 * sh2))) +
                (x1 * x1 + x2 * x2) / (8.0 * sh2);
    LogComplex v = LogComplex::from_complex(acc) *
                   LogComplex::from_complex(zeta1 * zc).pow_int(-nu) *
                   LogComplex(lp, 0.0);
    return v.value();
}

double density_erfc(double xi, double tau) {
    return specfun::erfc(xi) / (2.0 * kPi * (1.0 + tau));
}

double density_interp_large_sigma(cplx zeta, double sigma) {
    if (!(sigma >= 2.0))
        throw std::domain_error(
            "density_interp_large_sigma: needs sigma >= 2; evaluate the hat "
            "kernel directly below that");
    LogComplex v = kernel_airy_interp_real(sigma * zeta, sigma * zeta, sigma).value;
    return std::exp(v.log_abs + 2.0 * std::log(sigma)) * std::cos(v.phase);
}

}  // namespace chiredge::limit
