#include "chiredge/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace chiredge::specfun {

cplx laguerre(int k, int alpha, cplx z) {
    if (k < 0) throw std::invalid_argument("laguerre: k must be >= 0");
    cplx prev(1.0, 0.0);
    if (k == 0) return prev;
    cplx cur = cplx(1.0 + alpha, 0.0) - z;
    for (int j = 1; j < k; ++j) {
        cplx next = ((cplx(2.0 * j + 1.0 + alpha, 0.0) - z) * cur -
                     cplx(double(j + alpha), 0.0) * prev) /
                    cplx(double(j + 1), 0.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<LogComplex> laguerre_seq_log(int n, int alpha, cplx z) {
    if (n < 1) throw std::invalid_argument("laguerre_seq_log: n must be >= 1");
    std::vector<LogComplex> out;
    out.reserve(n);

    auto record = [&out](cplx p, double shift) {
        double m = std::abs(p);
        if (m == 0.0) {
            out.emplace_back();  // exact zero of the polynomial
        } else {
            out.emplace_back(std::log(m) + shift, std::arg(p));
        }
    };

    // Recurrence on rescaled values: (prev, cur) hold L_{j-1}, L_j times
    // e^{-shift}. The per-step growth factor is bounded by ~|z| + 2j, so the
    // 1e120 window leaves ample headroom before the next step.
    double shift = 0.0;
    cplx prev(1.0, 0.0);
    record(prev, shift);
    if (n == 1) return out;
    cplx cur = cplx(1.0 + alpha, 0.0) - z;
    record(cur, shift);
    for (int j = 1; j + 1 < n; ++j) {
        cplx next = ((cplx(2.0 * j + 1.0 + alpha, 0.0) - z) * cur -
                     cplx(double(j + alpha), 0.0) * prev) /
                    cplx(double(j + 1), 0.0);
        prev = cur;
        cur = next;
        double m = std::abs(cur);
        if (m > 1e120) {
            prev *= 1e-120;
            cur *= 1e-120;
            shift += std::log(1e120);
        } else if (m < 1e-120 && m > 0.0) {
            prev *= 1e120;
            cur *= 1e120;
            shift -= std::log(1e120);
        }
        record(cur, shift);
    }
    return out;
}

}  // namespace chiredge::specfun
