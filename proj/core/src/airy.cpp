#include "chiredge/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "chiredge/quadrature.hpp"

namespace chiredge::specfun {

namespace {

using ld = long double;
using cld = std::complex<ld>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kSectorEdge = 2.0943951023931953;  // 2 pi / 3

struct AiryPairLog {
    LogComplex ai, aip;
};

// ---- Maclaurin branch, |z| <= 4.5 -----------------------------------------
// Long double absorbs the e^{2 zeta} cancellation between the two power-series
// solutions; at the branch edge that costs ~2e-14 relative, inside it less.
void series_pair(cplx zd, cplx& ai, cplx& aip) {
    const ld c1 = 0.3550280538878172392600974L;   // Ai(0)
    const ld c2 = 0.2588194037928067984051836L;   // -Ai'(0)
    cld z(ld(zd.real()), ld(zd.imag()));
    cld z3 = z * z * z;

    cld f = 1.0L, g = z, tf = 1.0L, tg = z;
    for (int k = 0; k < 260; ++k) {
        tf *= z3 / (ld(3 * k + 2) * ld(3 * k + 3));
        tg *= z3 / (ld(3 * k + 3) * ld(3 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-24L * (std::abs(f) + 1.0L) &&
            std::abs(tg) < 1e-24L * (std::abs(g) + 1.0L))
            break;
    }
    // F' terms start z^2/2 with ratio z^3/((3k)(3k+2));
    // G' terms start 1     with ratio z^3/((3k-2)(3k))
    cld fp = z * z / 2.0L, gp = 1.0L, tfp = fp, tgp = 1.0L;
    for (int k = 1; k < 260; ++k) {
        tfp *= z3 / (ld(3 * k) * ld(3 * k + 2));
        tgp *= z3 / (ld(3 * k - 2) * ld(3 * k));
        fp += tfp;
        gp += tgp;
        if (std::abs(tfp) < 1e-24L * (std::abs(fp) + 1.0L) &&
            std::abs(tgp) < 1e-24L * (std::abs(gp) + 1.0L))
            break;
    }
    cld a = c1 * f - c2 * g;
    cld ap = c1 * fp - c2 * gp;
    ai = cplx(double(a.real()), double(a.imag()));
    aip = cplx(double(ap.real()), double(ap.imag()));
}

// ---- steepest descent branch, 4.5 < |z| <= 40, |Arg z| <= 2 pi/3 ----------
// The contour integral through the saddle u = i sqrt(z) is exact (the phase
// is cubic, so the shifted-contour expansion terminates):
//   Ai(z)  = e^{-zeta}/(2 pi) Int_R e^{-sqrt(z) s^2 + i s^3/3} ds
//   Ai'(z) = e^{-zeta}/(2 pi) Int_R (i s - sqrt(z)) e^{-sqrt(z) s^2 + i s^3/3} ds
// with zeta = (2/3) z^{3/2}. Gaussian decay Re sqrt(z) >= |sqrt(z)|/2 holds on
// the whole sector, so fixed panels resolve it.
AiryPairLog nsd_pair(cplx z) {
    cplx rz = std::sqrt(z);
    double arz = std::abs(rz);
    double c = 1.0 / std::sqrt(arz);            // width of the Gaussian in s
    double cos_half = std::max(0.45, rz.real() / arz);
    double Q = std::sqrt(42.0 / cos_half);

    std::vector<double> xg, wg;
    gauss_legendre_reference(24, xg, wg);

    cplx I0(0.0, 0.0), I1(0.0, 0.0);
    double c2 = c * c, c3 = c * c * c;
    double lo = 0.0;
    while (lo < Q) {
        // local phase rate of Im(-rz s^2 + s^3/3) in the scaled variable
        double rate = 2.0 * std::fabs(rz.imag()) * c2 * lo + c3 * lo * lo;
        double width = std::clamp(14.0 / (1.0 + rate), 0.35, 1.7);
        double hi = std::min(Q, lo + width);
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < 24; ++i) {
            for (double sgn : {1.0, -1.0}) {
                double q = sgn * (mid + half * xg[i]);
                double s = c * q;
                cplx ex = std::exp(-rz * (s * s) + cplx(0.0, s * s * s / 3.0));
                double w = half * wg[i];
                I0 += w * ex;
                I1 += w * ex * (cplx(0.0, s) - rz);
            }
        }
        lo = hi;
    }
    I0 *= c;
    I1 *= c;

    cplx zeta = 2.0 / 3.0 * z * rz;
    LogComplex pref(-zeta.real(), -zeta.imag());
    AiryPairLog out;
    out.ai = pref * LogComplex::from_complex(I0 / (2.0 * kPi));
    out.aip = pref * LogComplex::from_complex(I1 / (2.0 * kPi));
    return out;
}

// ---- asymptotic branch, |z| > 40, |Arg z| <= 2 pi/3 ------------------------
AiryPairLog asym_pair(cplx z) {
    cplx rz = std::sqrt(z);
    cplx zeta = 2.0 / 3.0 * z * rz;
    cplx p(1.0, 0.0);  // zeta^{-k}
    cplx su(1.0, 0.0), sv(1.0, 0.0);
    double u = 1.0, sgn = -1.0, last = 1e300;
    for (int k = 1; k <= 30; ++k) {
        u *= double(6 * k - 5) * double(6 * k - 3) * double(6 * k - 1) /
             (216.0 * double(k) * double(2 * k - 1));
        p /= zeta;
        cplx term = u * p;
        double mag = std::abs(term);
        if (mag > last) break;
        last = mag;
        su += sgn * term;
        sv += sgn * term * (-(6.0 * k + 1.0) / (6.0 * k - 1.0));
        sgn = -sgn;
        if (mag < 1e-18) break;
    }
    double lq = std::log(std::abs(z)) * 0.25;  // log |z^{1/4}|
    double aq = std::arg(z) * 0.25;
    double lpre = -std::log(2.0 * std::sqrt(kPi));
    AiryPairLog out;
    out.ai = LogComplex(-zeta.real() + lpre - lq + std::log(std::abs(su)),
                        -zeta.imag() - aq + std::arg(su));
    out.aip = LogComplex(-zeta.real() + lpre + lq + std::log(std::abs(sv)),
                         -zeta.imag() + aq + std::arg(sv) + kPi);
    return out;
}

AiryPairLog pair_log(cplx z);

// Ai(z) = -(w Ai(wz) + conj(w) Ai(conj(w) z)), w = e^{2 pi i/3}; both rotated
// arguments land inside the principal sector.
AiryPairLog rotated_pair(cplx z) {
    const cplx w(-0.5, 0.8660254037844386);
    const cplx wb = std::conj(w);
    AiryPairLog p1 = pair_log(w * z);
    AiryPairLog p2 = pair_log(wb * z);
    LogComplexSum sa, sp;
    sa.add(p1.ai * LogComplex::from_complex(-w));
    sa.add(p2.ai * LogComplex::from_complex(-wb));
    sp.add(p1.aip * LogComplex::from_complex(-w * w));
    sp.add(p2.aip * LogComplex::from_complex(-wb * wb));
    return {sa.total(), sp.total()};
}

AiryPairLog pair_log(cplx z) {
    double r = std::abs(z);
    if (r <= 4.5) {
        cplx ai, aip;
        series_pair(z, ai, aip);
        return {LogComplex::from_complex(ai), LogComplex::from_complex(aip)};
    }
    if (std::fabs(std::arg(z)) > kSectorEdge + 1e-14) return rotated_pair(z);
    if (r <= 40.0) return nsd_pair(z);
    return asym_pair(z);
}

}  // namespace

cplx airy_ai(cplx z) {
    if (std::abs(z) <= 4.5) {
        cplx ai, aip;
        series_pair(z, ai, aip);
        return ai;
    }
    return pair_log(z).ai.value();
}

cplx airy_ai_prime(cplx z) {
    if (std::abs(z) <= 4.5) {
        cplx ai, aip;
        series_pair(z, ai, aip);
        return aip;
    }
    return pair_log(z).aip.value();
}

LogComplex airy_ai_log(cplx z) { return pair_log(z).ai; }

double airy_ai(double x) { return airy_ai(cplx(x, 0.0)).real(); }

double airy_ai_prime(double x) { return airy_ai_prime(cplx(x, 0.0)).real(); }

}  // namespace chiredge::specfun
