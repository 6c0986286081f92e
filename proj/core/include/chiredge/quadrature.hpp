#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chiredge {

enum class RuleKind {
    gauss_legendre,   // order-p rule on [a, b]
    circle_trapezoid, // m-point trapezoid on |z - center| = radius, weights include dz
    halfline_exp,     // composite Gauss-Legendre on [0, t_max], panel widths growing geometrically
};

struct QuadratureRule {
    RuleKind kind = RuleKind::gauss_legendre;
    std::vector<std::complex<double>> points;
    std::vector<std::complex<double>> weights;
    std::size_t size() const { return points.size(); }
};

struct RuleParams {
    // gauss_legendre
    double a = -1.0;
    double b = 1.0;
    int order = 32;
    // circle_trapezoid
    std::complex<double> center{0.0, 0.0};
    double radius = 1.0;
    int m = 256;
    // halfline_exp
    double t_max = 30.0;
    double first_width = 0.5;
    double growth = 1.15;
    int panel_order = 24;
};

QuadratureRule make_rule(RuleKind kind, const RuleParams& p);

// Nodes/weights of the p-point Gauss-Legendre rule on [-1, 1].
// Computed by Newton iteration on the Legendre recurrence; cached per order.
void gauss_legendre_reference(int order, std::vector<double>& x, std::vector<double>& w);

// Convenience wrappers around make_rule.
QuadratureRule gauss_legendre(int order, double a, double b);
QuadratureRule circle_rule(double radius, int m, std::complex<double> center = {0.0, 0.0});
QuadratureRule halfline_rule(double t_max, double first_width, double growth, int panel_order);

}  // namespace chiredge
