#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "chiredge/specfun.hpp"
#include "support/oracles.hpp"

using namespace chiredge;
namespace sf = chiredge::specfun;
using cplx = std::complex<double>;

TEST_CASE("erfc matches the series/continued-fraction oracle") {
    CHECK(sf::erfc(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-13));
    for (double x : {-3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0}) {
        double ref = oracles::erfc_ref(x);
        CHECK(sf::erfc(x) == doctest::Approx(ref).epsilon(1e-12));
    }
    CHECK(sf::erf(0.7) + sf::erfc(0.7) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("laguerre frozen values") {
    CHECK(sf::laguerre(2, 0, 3.0).real() == doctest::Approx(-0.5).epsilon(1e-14));
    cplx v = sf::laguerre(1, 2, cplx(0.0, 0.5));
    CHECK(v.real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("laguerre recurrence agrees with explicit low degrees") {
    std::vector<cplx> pts = {{0.3, 0.0}, {2.0, 1.0}, {-1.5, 0.7}, {0.0, -2.0}, {4.0, -3.0}};
    for (int alpha : {0, 1, 2, 3}) {
        for (int k = 0; k <= 3; ++k) {
            for (auto z : pts) {
                cplx ref = oracles::laguerre_explicit(k, alpha, z);
                cplx got = sf::laguerre(k, alpha, z);
                CHECK(std::abs(got - ref) <= 1e-12 * (1.0 + std::abs(ref)));
            }
        }
    }
}

TEST_CASE("laguerre log sequence tracks the plain recurrence") {
    cplx z(8.0, 3.0);
    auto seq = sf::laguerre_seq_log(30, 2, z);
    REQUIRE(seq.size() == 30);
    for (int k = 0; k < 30; ++k) {
        cplx ref = sf::laguerre(k, 2, z);
        cplx got = seq[k].value();
        CHECK(std::abs(got - ref) <= 1e-10 * std::abs(ref));
    }
}

TEST_CASE("laguerre log sequence survives arguments that overflow doubles") {
    // |L_k(z)| ~ |z|^k / k! near degree 600 at |z| ~ 9000 is far beyond
    // double range; the log form must stay finite and monotone-ish
    cplx z(9000.0, 150.0);
    auto seq = sf::laguerre_seq_log(600, 1, z);
    for (auto& t : seq) {
        CHECK(std::isfinite(t.log_abs));
    }
    CHECK(seq[599].log_abs > 1000.0);  // astronomically large, yet representable
}

TEST_CASE("bessel K frozen and oracle values") {
    CHECK(sf::bessel_k(0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-12));
    CHECK(sf::bessel_k(1, 1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-12));

    for (int nu : {0, 1, 2, 3}) {
        for (double x : {1e-6, 1e-3, 0.1, 1.0, 5.0, 8.0}) {
            double ref = oracles::bessel_k_series_ref(nu, x);
            double got = sf::bessel_k(nu, x);
            CHECK(got == doctest::Approx(ref).epsilon(1e-10));
        }
        for (double x : {30.0, 100.0, 700.0}) {
            double ref = oracles::bessel_k_asymptotic_ref(nu, x);
            double got = sf::bessel_k(nu, x);
            CHECK(got == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel K log form covers the far tail") {
    // K_nu(x) ~ sqrt(pi/2x) e^{-x}: check the log against the expansion where
    // the linear scale is long dead
    for (double x : {1.0e3, 1.0e4, 1.0e6}) {
        for (int nu : {0, 1, 3}) {
            double mu = 4.0 * nu * nu;
            double t1 = (mu - 1.0) / (8.0 * x);
            double t2 = t1 * (mu - 9.0) / (2.0 * 8.0 * x);
            double t3 = t2 * (mu - 25.0) / (3.0 * 8.0 * x);
            double expect = 0.5 * std::log(M_PI / (2.0 * x)) - x
                          + std::log1p(t1 + t2 + t3);
            CHECK(sf::bessel_k_log(nu, x) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("bessel K/I Wronskian in the handoff region") {
    // I_nu(x) K_{nu+1}(x) + I_{nu+1}(x) K_nu(x) = 1/x
    for (double x : {12.0, 20.0}) {
        for (int nu : {0, 1, 2}) {
            double w = oracles::bessel_i_ref(nu, x) * sf::bessel_k(nu + 1, x) +
                       oracles::bessel_i_ref(nu + 1, x) * sf::bessel_k(nu, x);
            CHECK(w == doctest::Approx(1.0 / x).epsilon(1e-10));
        }
    }
}

TEST_CASE("airy frozen values") {
    CHECK(sf::airy_ai(0.0) == doctest::Approx(0.35502805388781724).epsilon(1e-13));
    CHECK(sf::airy_ai(1.0) == doctest::Approx(0.13529241631288141).epsilon(1e-13));
    CHECK(sf::airy_ai_prime(0.0) == doctest::Approx(-0.25881940379280682).epsilon(1e-13));
}

TEST_CASE("airy matches the series oracle inside |z| <= 5") {
    std::vector<cplx> pts;
    for (double r : {0.5, 2.0, 3.5, 5.0}) {
        for (double th : {0.0, 0.7, 1.57, 2.4, 3.14159, -0.7, -2.4}) {
            pts.emplace_back(r * std::cos(th), r * std::sin(th));
        }
    }
    for (auto z : pts) {
        cplx ref = oracles::airy_ai_series_ref(z);
        cplx got = sf::airy_ai(z);
        CHECK(std::abs(got - ref) <= 1e-12 * std::abs(ref));
        cplx refp = oracles::airy_ai_prime_series_ref(z);
        cplx gotp = sf::airy_ai_prime(z);
        CHECK(std::abs(gotp - refp) <= 1e-12 * std::abs(refp));
    }
}

TEST_CASE("airy agrees with the oracle in the handoff annulus") {
    // series oracle still carries ~1e-9 at |z| = 6.5
    for (double th : {0.0, 1.0, 2.0, 3.14159, -1.5}) {
        cplx z = 6.5 * cplx(std::cos(th), std::sin(th));
        cplx ref = oracles::airy_ai_series_ref(z);
        cplx got = sf::airy_ai(z);
        CHECK(std::abs(got - ref) <= 2e-9 * std::abs(ref));
    }
}

TEST_CASE("airy large real arguments against the classical expansions") {
    for (double x : {8.0, 12.0, 20.0, 35.0}) {
        double ai = sf::airy_ai(x);
        double aip = sf::airy_ai_prime(x);
        double ref = oracles::airy_kernel_cd(x, x);  // Ai'(x)^2 - x Ai(x)^2
        CHECK(aip * aip - x * ai * ai == doctest::Approx(ref).epsilon(5e-8));
        double refp = oracles::airy_kernel_cd(x, x + 0.5);
        CHECK((sf::airy_ai(x) * sf::airy_ai_prime(x + 0.5) -
               sf::airy_ai_prime(x) * sf::airy_ai(x + 0.5)) / (-0.5) ==
              doctest::Approx(refp).epsilon(5e-8));
    }
    for (double x : {-9.0, -15.0, -30.0}) {
        double ref = oracles::airy_kernel_cd(x, x);
        double ai = sf::airy_ai(x), aip = sf::airy_ai_prime(x);
        CHECK(aip * aip - x * ai * ai == doctest::Approx(ref).epsilon(5e-8));
    }
}

TEST_CASE("airy satisfies its differential equation off the axes") {
    // five-point second derivative vs z * Ai(z)
    for (cplx z : {cplx(-6.0, 2.0), cplx(2.0, 4.0), cplx(-4.0, -5.0), cplx(7.0, 1.0)}) {
        double h = 0.02;
        cplx d2 = (-sf::airy_ai(z + 2.0 * h) + 16.0 * sf::airy_ai(z + h) -
                   30.0 * sf::airy_ai(z) + 16.0 * sf::airy_ai(z - h) -
                   sf::airy_ai(z - 2.0 * h)) / (12.0 * h * h);
        cplx rhs = z * sf::airy_ai(z);
        CHECK(std::abs(d2 - rhs) <= 1e-6 * std::abs(rhs) + 1e-12);
    }
}

TEST_CASE("airy log form extends beyond double range") {
    // moderate z: log form must agree with the linear value
    for (cplx z : {cplx(3.0, 1.0), cplx(-2.0, 0.5), cplx(10.0, 0.0)}) {
        LogComplex lg = sf::airy_ai_log(z);
        cplx lin = sf::airy_ai(z);
        CHECK(std::abs(lg.value() - lin) <= 1e-11 * std::abs(lin));
    }
    // far out on the positive axis Ai underflows but the log stays exact:
    // log Ai(x) = -2/3 x^{3/2} - (1/4) log x - log(2 sqrt(pi)) + O(x^{-3/2})
    for (double x : {400.0, 2000.0}) {
        double expect = -2.0 / 3.0 * std::pow(x, 1.5) - 0.25 * std::log(x) -
                        std::log(2.0 * std::sqrt(M_PI));
        double corr = -5.0 / (48.0 * std::pow(x, 1.5));  // leading series term
        CHECK(sf::airy_ai_log(cplx(x, 0.0)).log_abs ==
              doctest::Approx(expect + corr).epsilon(1e-10));
    }
}

TEST_CASE("bessel J table values and recurrence") {
    CHECK(sf::bessel_j(0, cplx(1.0, 0.0)).real() ==
          doctest::Approx(0.7651976865579666).epsilon(1e-12));
    CHECK(sf::bessel_j(1, cplx(1.0, 0.0)).real() ==
          doctest::Approx(0.44005058574493355).epsilon(1e-12));
    CHECK(sf::bessel_j(2, cplx(2.0, 0.0)).real() ==
          doctest::Approx(0.35283402861563773).epsilon(1e-12));

    for (cplx z : {cplx(1.5, 0.5), cplx(-2.0, 3.0), cplx(6.0, -1.0)}) {
        for (int nu : {1, 2, 3}) {
            cplx lhs = sf::bessel_j(nu - 1, z) + sf::bessel_j(nu + 1, z);
            cplx rhs = 2.0 * double(nu) / z * sf::bessel_j(nu, z);
            CHECK(std::abs(lhs - rhs) <= 1e-11 * (std::abs(lhs) + std::abs(rhs) + 1.0));
        }
        CHECK(std::abs(sf::bessel_j(1, std::conj(z)) - std::conj(sf::bessel_j(1, z))) <
              1e-13 * std::abs(sf::bessel_j(1, z)));
    }
}

TEST_CASE("log-complex arithmetic and accumulation") {
    LogComplex a = LogComplex::from_complex(cplx(3.0, 4.0));
    LogComplex b = LogComplex::from_complex(cplx(-1.0, 2.0));
    cplx prod = (a * b).value();
    CHECK(std::abs(prod - cplx(3.0, 4.0) * cplx(-1.0, 2.0)) < 1e-13 * std::abs(prod));

    // sum of terms spanning 600 orders of magnitude: only the top survives
    LogComplexSum s;
    s.add(LogComplex(700.0, 0.3));
    s.add(LogComplex(-700.0, 1.1));
    LogComplex t = s.total();
    CHECK(t.log_abs == doctest::Approx(700.0).epsilon(1e-14));
    CHECK(t.phase == doctest::Approx(0.3).epsilon(1e-14));

    // cancellation handled in the rescaled frame
    LogComplexSum c;
    c.add(LogComplex::from_real(1.0e8));
    c.add(LogComplex::from_real(-1.0e8));
    c.add(LogComplex::from_real(2.5));
    CHECK(c.total().value().real() == doctest::Approx(2.5).epsilon(1e-7));

    CHECK(LogComplex::zero().is_zero());
    CHECK((LogComplex::zero() * a).is_zero());
    CHECK(LogComplex::from_real(-2.0).phase == doctest::Approx(M_PI));
}
