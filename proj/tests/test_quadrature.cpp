#include "doctest.h"

#include <cmath>
#include <complex>

#include "chiredge/quadrature.hpp"

using namespace chiredge;
using cplx = std::complex<double>;

namespace {

double integrate_real(const QuadratureRule& r, double (*f)(double)) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        s += r.weights[i].real() * f(r.points[i].real());
    return s;
}

}  // namespace

TEST_CASE("gauss-legendre order 2 has the textbook nodes") {
    auto r = gauss_legendre(2, -1.0, 1.0);
    REQUIRE(r.size() == 2);
    CHECK(r.points[0].real() == doctest::Approx(-0.5773502691896257).epsilon(1e-14));
    CHECK(r.points[1].real() == doctest::Approx(0.5773502691896257).epsilon(1e-14));
    CHECK(r.weights[0].real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.weights[1].real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gauss-legendre is exact through degree 2p-1") {
    for (int p : {4, 8, 16}) {
        auto r = gauss_legendre(p, -1.0, 1.0);
        for (int k = 0; k <= 2 * p - 1; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i)
                s += r.weights[i].real() * std::pow(r.points[i].real(), k);
            double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
            CHECK(std::fabs(s - exact) < 1e-13);
        }
    }
}

TEST_CASE("gauss-legendre maps affinely to [a, b]") {
    auto r = gauss_legendre(6, 0.0, 2.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        s += r.weights[i].real() * std::pow(r.points[i].real(), 3);
    CHECK(s == doctest::Approx(4.0).epsilon(1e-13));

    double total = 0.0;
    for (auto& w : r.weights) total += w.real();
    CHECK(total == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("circle rule reproduces residue calculus") {
    auto r = circle_rule(0.95, 64);
    for (int k : {0, 1, 2}) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i)
            s += r.weights[i] * std::pow(r.points[i], k);
        CHECK(std::abs(s) < 1e-12);
    }
    cplx inv = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        inv += r.weights[i] / r.points[i];
    CHECK(std::abs(inv - cplx(0.0, 2.0 * M_PI)) < 1e-12);
}

TEST_CASE("circle rule handles an off-origin center") {
    cplx c(1.0, 0.0);
    auto r = circle_rule(0.25, 96, c);
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        s += r.weights[i] / (r.points[i] - c);
    CHECK(std::abs(s - cplx(0.0, 2.0 * M_PI)) < 1e-12);
    // pole outside the contour contributes nothing
    cplx far = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        far += r.weights[i] / (r.points[i] + 2.0);
    CHECK(std::abs(far) < 1e-12);
}

TEST_CASE("halfline rule integrates exponential decay") {
    auto r = halfline_rule(40.0, 0.5, 1.15, 24);
    double e1 = integrate_real(r, [](double t) { return std::exp(-t); });
    CHECK(e1 == doctest::Approx(1.0).epsilon(1e-12));
    double e2 = integrate_real(r, [](double t) { return t * std::exp(-t); });
    CHECK(e2 == doctest::Approx(1.0).epsilon(1e-12));
    // nodes are ordered and confined to [0, t_max]
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.points[i].real() >= 0.0);
        CHECK(r.points[i].real() <= 40.0);
        if (i > 0) CHECK(r.points[i].real() > r.points[i - 1].real());
    }
}

TEST_CASE("make_rule dispatches on kind") {
    RuleParams p;
    p.order = 5;
    p.a = -2.0;
    p.b = 3.0;
    auto gl = make_rule(RuleKind::gauss_legendre, p);
    CHECK(gl.kind == RuleKind::gauss_legendre);
    CHECK(gl.size() == 5);

    p.radius = 1.05;
    p.m = 32;
    auto ci = make_rule(RuleKind::circle_trapezoid, p);
    CHECK(ci.kind == RuleKind::circle_trapezoid);
    CHECK(ci.size() == 32);
    for (auto& z : ci.points) CHECK(std::abs(z) == doctest::Approx(1.05).epsilon(1e-14));

    p.t_max = 30.0;
    auto hl = make_rule(RuleKind::halfline_exp, p);
    CHECK(hl.kind == RuleKind::halfline_exp);
    CHECK(hl.size() > 0);
}
