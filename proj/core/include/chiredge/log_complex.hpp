#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace chiredge {

// A complex number stored as (log|z|, arg z). The finite-n kernels multiply
// factors whose magnitudes span thousands of orders, so products and sums are
// carried in this form and only exponentiated at the end.
//
// Invariants: phase in (-pi, pi]; log_abs == -inf encodes exact zero (phase 0).
struct LogComplex {
    double log_abs = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    LogComplex() = default;
    LogComplex(double la, double ph) : log_abs(la), phase(wrap(ph)) {}

    static LogComplex zero() { return LogComplex(); }

    static LogComplex from_real(double x) {
        if (x == 0.0) return zero();
        return LogComplex(std::log(std::fabs(x)), x > 0.0 ? 0.0 : pi());
    }

    static LogComplex from_complex(const std::complex<double>& z) {
        if (z == std::complex<double>(0.0, 0.0)) return zero();
        return LogComplex(std::log(std::abs(z)), std::arg(z));
    }

    // log(x) + i*phi for x already in log scale (x = exp(log_mag))
    static LogComplex from_log_polar(double log_mag, double phi) {
        return LogComplex(log_mag, phi);
    }

    bool is_zero() const { return std::isinf(log_abs) && log_abs < 0.0; }

    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        double m = std::exp(log_abs);  // may saturate to 0 or inf
        return {m * std::cos(phase), m * std::sin(phase)};
    }

    friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return LogComplex(a.log_abs + b.log_abs, a.phase + b.phase);
    }

    friend LogComplex operator/(const LogComplex& a, const LogComplex& b) {
        return LogComplex(a.log_abs - b.log_abs, a.phase - b.phase);
    }

    LogComplex pow_int(long k) const {
        if (is_zero()) return zero();
        return LogComplex(log_abs * double(k), phase * double(k));
    }

    static double pi() { return 3.14159265358979323846; }

    static double wrap(double ph) {
        if (!std::isfinite(ph)) return 0.0;
        double w = std::remainder(ph, 2.0 * pi());
        if (w <= -pi()) w += 2.0 * pi();
        return w;
    }
};

// Running sum of LogComplex terms. Terms are rescaled against the largest
// magnitude seen so far, so the sum stays representable even when individual
// terms do not fit a double.
class LogComplexSum {
public:
    void add(const LogComplex& t) {
        if (t.is_zero()) return;
        if (t.log_abs > peak_) {
            double shrink = std::exp(peak_ - t.log_abs);
            acc_ *= shrink;
            peak_ = t.log_abs;
        }
        double m = std::exp(t.log_abs - peak_);
        acc_ += std::complex<double>(m * std::cos(t.phase), m * std::sin(t.phase));
    }

    // Largest |term| accumulated so far, in log scale.
    double peak_log() const { return peak_; }

    LogComplex total() const {
        double a = std::abs(acc_);
        if (a == 0.0 || std::isinf(peak_)) return LogComplex::zero();
        return LogComplex(peak_ + std::log(a), std::arg(acc_));
    }

private:
    double peak_ = -std::numeric_limits<double>::infinity();
    std::complex<double> acc_{0.0, 0.0};
};

}  // namespace chiredge
