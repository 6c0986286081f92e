#pragma once

#include <complex>
#include <vector>

#include "chiredge/log_complex.hpp"

namespace chiredge::specfun {

using cplx = std::complex<double>;

// Airy function Ai(z) for complex z, accurate over |z| <= 40 on the whole
// plane (connection formula near the negative axis) and by asymptotic
// expansion beyond. airy_ai_log returns the same value in log form and stays
// usable far into the decaying sector where Ai underflows a double.
cplx airy_ai(cplx z);
cplx airy_ai_prime(cplx z);
LogComplex airy_ai_log(cplx z);

double airy_ai(double x);
double airy_ai_prime(double x);

// log K_nu(x) for integer nu >= 0, real x in [1e-6, 1e6]: K_0 and K_1 from
// the cosh integral representation (trapezoid, double-exponential tails),
// then upward recurrence K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu.
double bessel_k_log(int nu, double x);
double bessel_k(int nu, double x);

// Generalized Laguerre polynomial L_k^alpha(z), three-term recurrence in k.
cplx laguerre(int k, int alpha, cplx z);

// L_0^alpha(z) ... L_{n-1}^alpha(z) in log form. The recurrence is carried
// with a running exponent so degrees grow past the double range safely.
std::vector<LogComplex> laguerre_seq_log(int n, int alpha, cplx z);

// Bessel J_nu(z), integer nu >= 0, by Maclaurin series; intended for
// |z| <= ~20 where double-precision cancellation stays below ~1e-12.
cplx bessel_j(int nu, cplx z);

double erfc(double x);
double erf(double x);

}  // namespace chiredge::specfun
