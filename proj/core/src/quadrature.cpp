#include "chiredge/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chiredge {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mutex g_gl_mutex;
std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_gl_cache;

// Newton iteration on the Legendre three-term recurrence. Nodes come out
// ascending; symmetric pairs share a weight.
void compute_gl(int order, std::vector<double>& x, std::vector<double>& w) {
    x.assign(order, 0.0);
    w.assign(order, 0.0);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double p0 = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            dp = order * (t * p0 - p1) / (t * t - 1.0);
            double dt = p0 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[order - 1 - i] = t;
        double wi = 2.0 / ((1.0 - t * t) * dp * dp);
        w[i] = w[order - 1 - i] = wi;
    }
}

}  // namespace

void gauss_legendre_reference(int order, std::vector<double>& x, std::vector<double>& w) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order >= 1 required");
    {
        std::lock_guard<std::mutex> lock(g_gl_mutex);
        auto it = g_gl_cache.find(order);
        if (it != g_gl_cache.end()) {
            x = it->second.first;
            w = it->second.second;
            return;
        }
    }
    compute_gl(order, x, w);
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    g_gl_cache.emplace(order, std::make_pair(x, w));
}

QuadratureRule gauss_legendre(int order, double a, double b) {
    std::vector<double> x, w;
    gauss_legendre_reference(order, x, w);
    QuadratureRule r;
    r.kind = RuleKind::gauss_legendre;
    r.points.reserve(order);
    r.weights.reserve(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
        r.points.emplace_back(mid + half * x[i], 0.0);
        r.weights.emplace_back(half * w[i], 0.0);
    }
    return r;
}

QuadratureRule circle_rule(double radius, int m, std::complex<double> center) {
    if (radius <= 0.0 || m < 4)
        throw std::invalid_argument("circle_rule: radius > 0 and m >= 4 required");
    QuadratureRule r;
    r.kind = RuleKind::circle_trapezoid;
    r.points.reserve(m);
    r.weights.reserve(m);
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * kPi * j / m;
        std::complex<double> e(std::cos(th), std::sin(th));
        r.points.push_back(center + radius * e);
        // dz = i r e^{i th} d th
        r.weights.push_back(std::complex<double>(0.0, 1.0) * radius * e * (2.0 * kPi / m));
    }
    return r;
}

QuadratureRule halfline_rule(double t_max, double first_width, double growth,
                             int panel_order) {
    if (t_max <= 0.0 || first_width <= 0.0 || growth < 1.0 || panel_order < 2)
        throw std::invalid_argument("halfline_rule: bad parameters");
    std::vector<double> x, w;
    gauss_legendre_reference(panel_order, x, w);
    QuadratureRule r;
    r.kind = RuleKind::halfline_exp;
    double lo = 0.0, width = first_width;
    while (lo < t_max) {
        double hi = std::min(lo + width, t_max);
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < panel_order; ++i) {
            r.points.emplace_back(mid + half * x[i], 0.0);
            r.weights.emplace_back(half * w[i], 0.0);
        }
        lo = hi;
        width *= growth;
    }
    return r;
}

QuadratureRule make_rule(RuleKind kind, const RuleParams& p) {
    switch (kind) {
        case RuleKind::gauss_legendre:
            return gauss_legendre(p.order, p.a, p.b);
        case RuleKind::circle_trapezoid:
            return circle_rule(p.radius, p.m, p.center);
        case RuleKind::halfline_exp:
            return halfline_rule(p.t_max, p.first_width, p.growth, p.panel_order);
    }
    throw std::invalid_argument("make_rule: unknown kind");
}

}  // namespace chiredge
