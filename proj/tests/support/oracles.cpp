#include "oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace oracles {

namespace {

using ld = long double;
using cld = std::complex<ld>;

constexpr ld kPi = 3.141592653589793238462643383279503L;

// ---- Gauss-Legendre nodes for the reference Nystrom determinant ----------
// Newton on the Legendre recurrence, independent of the library's rule maker.
void gl_nodes(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        ld t = std::cos(kPi * (ld(i) + 0.75L) / (ld(m) + 0.5L));
        ld p0 = 0.0L, p1 = 0.0L;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0L;
            p1 = 0.0L;
            for (int j = 0; j < m; ++j) {
                ld p2 = p1;
                p1 = p0;
                p0 = ((2.0L * j + 1.0L) * t * p1 - ld(j) * p2) / ld(j + 1);
            }
            ld dp = ld(m) * (t * p0 - p1) / (t * t - 1.0L);
            ld dt = p0 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-19L) break;
        }
        p0 = 1.0L;
        p1 = 0.0L;
        for (int j = 0; j < m; ++j) {
            ld p2 = p1;
            p1 = p0;
            p0 = ((2.0L * j + 1.0L) * t * p1 - ld(j) * p2) / ld(j + 1);
        }
        ld dp = ld(m) * (t * p0 - p1) / (t * t - 1.0L);
        x[i] = double(-t);
        x[m - 1 - i] = double(t);
        w[i] = w[m - 1 - i] = double(2.0L / ((1.0L - t * t) * dp * dp));
    }
}

// ---- real-axis Airy: series on [-8, 7], asymptotics outside --------------

void airy_series_real(ld x, ld& ai, ld& aip) {
    const ld c1 = 0.3550280538878172392600974L;   // Ai(0) = 3^(-2/3)/Gamma(2/3)
    const ld c2 = 0.2588194037928067984051836L;   // -Ai'(0) = 3^(-1/3)/Gamma(1/3)
    ld x3 = x * x * x;
    ld f = 1.0L, fp = 0.0L;     // sum of F, F'
    ld g = x, gp = 1.0L;        // sum of G, G'
    ld tf = 1.0L, tg = x;
    for (int k = 0; k < 400; ++k) {
        ld tf_next = tf * x3 / (ld(3 * k + 2) * ld(3 * k + 3));
        ld tg_next = tg * x3 / (ld(3 * k + 3) * ld(3 * k + 4));
        f += tf_next;
        g += tg_next;
        // d/dx of x^{3k+3} and x^{3k+4} terms
        if (x != 0.0L) {
            fp += tf_next * ld(3 * k + 3) / x;
            gp += tg_next * ld(3 * k + 4) / x;
        }
        tf = tf_next;
        tg = tg_next;
        if (std::fabs(tf) < 1e-25L * (std::fabs(f) + 1.0L) &&
            std::fabs(tg) < 1e-25L * (std::fabs(g) + 1.0L))
            break;
    }
    ai = c1 * f - c2 * g;
    aip = c1 * fp - c2 * gp;
}

// u_k coefficients of the large-|x| expansions, u_0 = 1.
ld u_coef(int k, ld prev) {
    // u_{k} = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1))
    return prev * ld(6 * k - 5) * ld(6 * k - 3) * ld(6 * k - 1) /
           (216.0L * ld(k) * ld(2 * k - 1));
}

void airy_asymptotic_pos(ld x, ld& ai, ld& aip) {
    ld zeta = 2.0L / 3.0L * std::pow(x, 1.5L);
    ld su = 1.0L, sv = 1.0L;
    ld u = 1.0L, sgn = -1.0L;
    for (int k = 1; k <= 40; ++k) {
        u = u_coef(k, u);
        ld term = u / std::pow(zeta, ld(k));
        if (std::fabs(term) > std::fabs(u / std::pow(zeta, ld(k - 1))) && k > 3) break;
        su += sgn * term;
        // v_k = -(6k+1)/(6k-1) u_k
        sv += sgn * term * (-(6.0L * k + 1.0L) / (6.0L * k - 1.0L));
        sgn = -sgn;
        if (std::fabs(term) < 1e-22L) break;
    }
    ld pre = std::exp(-zeta) / (2.0L * std::sqrt(kPi));
    ai = pre * su / std::pow(x, 0.25L);
    aip = -pre * sv * std::pow(x, 0.25L);
}

void airy_asymptotic_neg(ld xm, ld& ai, ld& aip) {
    // x = -xm, xm > 0
    ld zeta = 2.0L / 3.0L * std::pow(xm, 1.5L);
    ld c = std::cos(zeta - kPi / 4.0L), s = std::sin(zeta - kPi / 4.0L);
    // even/odd splits of sum (-1)^k u_k zeta^-k and the v analog
    ld ue = 1.0L, uo = 0.0L, ve = 1.0L, vo = 0.0L;
    ld u = 1.0L, last = 1e30L;
    for (int k = 1; k <= 40; ++k) {
        u = u_coef(k, u);
        ld term = u / std::pow(zeta, ld(k));
        if (term > last) break;
        last = term;
        ld v_term = term * (-(6.0L * k + 1.0L) / (6.0L * k - 1.0L));
        int r = k % 4;
        // (-1)^{k/2 rounded}: series signs follow cos/sin expansions
        if (r == 1) { uo += term; vo += v_term; }
        else if (r == 2) { ue -= term; ve -= v_term; }
        else if (r == 3) { uo -= term; vo -= v_term; }
        else { ue += term; ve += v_term; }
        if (term < 1e-22L) break;
    }
    ld pre = 1.0L / (std::sqrt(kPi) * std::pow(xm, 0.25L));
    ai = pre * (c * ue + s * uo);
    aip = std::pow(xm, 0.25L) / std::sqrt(kPi) * (s * ve - c * vo);
}

void airy_real(ld x, ld& ai, ld& aip) {
    if (x > 7.0L) airy_asymptotic_pos(x, ai, aip);
    else if (x < -8.0L) airy_asymptotic_neg(-x, ai, aip);
    else airy_series_real(x, ai, aip);
}

}  // namespace

double erfc_ref(double x) {
    if (x < 0.0) return 2.0 - erfc_ref(-x);
    if (x <= 2.5) {
        // erf by Maclaurin series, then complement
        ld t = ld(x), term = t, sum = t;
        for (int k = 1; k < 200; ++k) {
            term *= -t * t / ld(k);
            ld add = term / ld(2 * k + 1);
            sum += add;
            if (std::fabs(add) < 1e-24L * std::fabs(sum)) break;
        }
        return double(1.0L - 2.0L / std::sqrt(kPi) * sum);
    }
    // continued fraction, modified Lentz
    ld b = ld(x), f = 1e-300L, C = f, D = 0.0L;
    for (int j = 1; j < 400; ++j) {
        ld a = (j == 1) ? 1.0L : ld(j - 1) / 2.0L;
        D = b + a * D;
        if (D == 0.0L) D = 1e-300L;
        C = b + a / C;
        if (C == 0.0L) C = 1e-300L;
        D = 1.0L / D;
        ld delta = C * D;
        f *= delta;
        if (std::fabs(delta - 1.0L) < 1e-20L) break;
    }
    return double(std::exp(-ld(x) * ld(x)) / std::sqrt(kPi) * f);
}

cplx airy_ai_series_ref(cplx z) {
    const ld c1 = 0.3550280538878172392600974L;
    const ld c2 = 0.2588194037928067984051836L;
    cld zz(ld(z.real()), ld(z.imag()));
    cld z3 = zz * zz * zz;
    cld f = 1.0L, g = zz, tf = 1.0L, tg = zz;
    for (int k = 0; k < 500; ++k) {
        tf *= z3 / (ld(3 * k + 2) * ld(3 * k + 3));
        tg *= z3 / (ld(3 * k + 3) * ld(3 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-25L * (std::abs(f) + 1.0L) &&
            std::abs(tg) < 1e-25L * (std::abs(g) + 1.0L))
            break;
    }
    cld ai = c1 * f - c2 * g;
    return {double(ai.real()), double(ai.imag())};
}

cplx airy_ai_prime_series_ref(cplx z) {
    const ld c1 = 0.3550280538878172392600974L;
    const ld c2 = 0.2588194037928067984051836L;
    cld zz(ld(z.real()), ld(z.imag()));
    cld z3 = zz * zz * zz;
    // F' = sum z^{3k+2} prod(3j-2)/(3k+2)! style; build from term recurrences
    cld fp = 0.0L, gp = 1.0L;
    cld tf = 1.0L, tg = zz;  // terms of F and G themselves
    cld tfp = zz * zz / 2.0L;  // first term of F' (k=1 contribution)
    cld tgp = 1.0L;
    fp = tfp;
    for (int k = 1; k < 500; ++k) {
        // term ratios of F' and G': z^3/((3k)(3k+2)) and z^3/((3k-2)(3k))
        tfp *= z3 / (ld(3 * k) * ld(3 * k + 2));
        tgp *= z3 / (ld(3 * k - 2) * ld(3 * k));
        fp += tfp;
        gp += tgp;
        if (std::abs(tfp) < 1e-25L * (std::abs(fp) + 1.0L) &&
            std::abs(tgp) < 1e-25L * (std::abs(gp) + 1.0L))
            break;
    }
    (void)tf;
    (void)tg;
    cld aip = c1 * fp - c2 * gp;
    return {double(aip.real()), double(aip.imag())};
}

double bessel_i_ref(int nu, double x) {
    ld half = ld(x) / 2.0L;
    ld term = std::pow(half, ld(nu)) / std::tgammal(ld(nu) + 1.0L);
    ld sum = term;
    for (int k = 1; k < 2000; ++k) {
        term *= half * half / (ld(k) * ld(k + nu));
        sum += term;
        if (term < 1e-24L * sum) break;
    }
    return double(sum);
}

double bessel_k_series_ref(int nu, double x) {
    if (x <= 0.0) throw std::domain_error("bessel_k_series_ref: x > 0 required");
    ld half = ld(x) / 2.0L;
    ld lnhalf = std::log(half);
    // finite sum (empty for nu = 0)
    ld fin = 0.0L;
    {
        ld fac = 1.0L;  // (nu-k-1)!/k! (-x^2/4)^k running
        for (int k = 0; k < nu; ++k) {
            if (k == 0) {
                fac = std::tgammal(ld(nu));
            } else {
                fac *= -half * half / (ld(k) * ld(nu - k));
            }
            fin += fac;
        }
        fin *= 0.5L * std::pow(half, ld(-nu));
    }
    // log term
    ld sign = (nu % 2 == 0) ? 1.0L : -1.0L;
    ld logterm = -sign * lnhalf * ld(bessel_i_ref(nu, x));
    // psi series
    const ld gamma_e = 0.5772156649015328606065121L;
    ld psi_k = -gamma_e;            // psi(1)
    ld psi_nk = -gamma_e;           // psi(nu+1)
    for (int j = 1; j <= nu; ++j) psi_nk += 1.0L / ld(j);
    ld term = std::pow(half, ld(nu)) / std::tgammal(ld(nu) + 1.0L);
    ld sum = (psi_k + psi_nk) * term;
    for (int k = 1; k < 2000; ++k) {
        term *= half * half / (ld(k) * ld(k + nu));
        psi_k += 1.0L / ld(k);
        psi_nk += 1.0L / ld(k + nu);
        ld add = (psi_k + psi_nk) * term;
        sum += add;
        if (std::fabs(add) < 1e-24L * std::fabs(sum)) break;
    }
    return double(fin + logterm + sign * 0.5L * sum);
}

double bessel_k_asymptotic_ref(int nu, double x) {
    ld mu = 4.0L * ld(nu) * ld(nu);
    ld sum = 1.0L, term = 1.0L, last = 1e30L;
    for (int k = 1; k <= 40; ++k) {
        term *= (mu - ld(2 * k - 1) * ld(2 * k - 1)) / (ld(k) * 8.0L * ld(x));
        if (std::fabs(term) > last) break;
        sum += term;
        last = std::fabs(term);
        if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
    }
    return double(std::sqrt(kPi / (2.0L * ld(x))) * std::exp(-ld(x)) * sum);
}

cplx laguerre_explicit(int k, int alpha, cplx z) {
    double A = alpha;
    switch (k) {
        case 0: return 1.0;
        case 1: return cplx(A + 1.0) - z;
        case 2: return 0.5 * z * z - (A + 2.0) * z + 0.5 * (A + 1.0) * (A + 2.0);
        case 3:
            return -z * z * z / 6.0 + 0.5 * (A + 3.0) * z * z -
                   0.5 * (A + 2.0) * (A + 3.0) * z +
                   (A + 1.0) * (A + 2.0) * (A + 3.0) / 6.0;
        default: throw std::domain_error("laguerre_explicit: degree <= 3 only");
    }
}

double kolmogorov_tail(double x) {
    if (x <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 200; ++k) {
        double term = std::exp(-2.0 * double(k) * double(k) * x * x);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-18) break;
    }
    return 2.0 * sum;
}

double airy_kernel_cd(double x, double y) {
    ld ax, axp, ay, ayp;
    airy_real(ld(x), ax, axp);
    airy_real(ld(y), ay, ayp);
    if (std::fabs(x - y) < 1e-7) {
        // diagonal (and near-diagonal by continuity): Ai'(x)^2 - x Ai(x)^2
        ld xm = (ld(x) + ld(y)) / 2.0L;
        ld am, amp;
        airy_real(xm, am, amp);
        return double(amp * amp - xm * am * am);
    }
    return double((ax * ayp - axp * ay) / (ld(x) - ld(y)));
}

double tracy_widom_cdf_ref(double t, int m, double L) {
    std::vector<double> x, w;
    gl_nodes(m, x, w);
    Eigen::MatrixXd M(m, m);
    std::vector<double> xs(m), ws(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = t + 0.5 * L * (x[i] + 1.0);
        ws[i] = 0.5 * L * w[i];
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            M(i, j) = std::sqrt(ws[i] * ws[j]) * airy_kernel_cd(xs[i], xs[j]);
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(m, m) - M;
    return A.partialPivLu().determinant();
}

double tracy_widom_mean_ref(int m, double lo, double hi, double h) {
    // E X = integral_lo^0 (-F) + integral_0^hi (1 - F), Simpson
    auto integrand = [&](double t) {
        double F = tracy_widom_cdf_ref(t, m);
        return (t < 0.0) ? -F : 1.0 - F;
    };
    int steps = int(std::round((hi - lo) / h));
    if (steps % 2 == 1) ++steps;
    double hh = (hi - lo) / steps;
    // tails: |F| < 1e-12 below lo, 1-F < 1e-12 above hi
    double sum = integrand(lo) + integrand(hi);
    for (int i = 1; i < steps; ++i)
        sum += integrand(lo + hh * i) * ((i % 2 == 1) ? 4.0 : 2.0);
    return sum * hh / 3.0;
}

}  // namespace oracles
