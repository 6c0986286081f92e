#pragma once

#include <complex>

#include "chiredge/log_complex.hpp"

namespace chiredge::limit {

using cplx = std::complex<double>;

enum class AiryRep { real_integral, double_contour };

struct HatKernelValue {
    LogComplex value;
    AiryRep representation = AiryRep::real_integral;
};

// Interpolating Airy kernel in hat normalization (imaginary parts measured in
// units of sigma), evaluated as the half-line Airy-product integral with the
// e^{sigma^6/6} prefactor and the integral combined in log scale. sigma > 0;
// at sigma = 0 use kernel_airy_interp, which has the elementary form.
HatKernelValue kernel_airy_interp_real(cplx zeta1, cplx zeta2, double sigma);

// Same hat kernel as a double integral over two horizontal lines R + i delta.
// Valid for sigma >= 0; at sigma = 0 the hat prefactor degenerates and the
// integral is returned bare, which is the analytic continuation of
// K^Airy(zeta1, conj zeta2)/sqrt(pi). delta only moves the contour; values
// are independent of it (up to quadrature error) for delta in [0.1, 1].
HatKernelValue kernel_airy_interp_contour(cplx zeta1, cplx zeta2, double sigma,
                                          double delta = 0.5);

// The kernel in edge coordinates (imaginary parts not rescaled): sigma times
// the hat kernel at (xi1 + i sigma eta1, xi2 + i sigma eta2). At sigma = 0 it
// degenerates to e^{-(eta1^2+eta2^2)/2} K^Airy(xi1, xi2) / sqrt(pi).
LogComplex kernel_airy_interp(cplx zeta1, cplx zeta2, double sigma);

// Classic Airy kernel, integral form: int_0^inf Ai(x1+t) Ai(x2+t) dt.
// Diagonal equals Ai'(x)^2 - x Ai(x)^2.
double kernel_airy(double x1, double x2);

// Transitional sine kernel: Gaussian damping in the imaginary directions
// times int_0^1 e^{-t^2 sh^2} cos(t (zeta1 - conj zeta2)) dt. The conjugation
// makes the kernel Hermitian; it agrees with the unconjugated form in the
// Hermitian limit (they differ by a determinant-preserving gauge factor).
cplx kernel_sine_interp(cplx zeta1, cplx zeta2, double sigma_hat);

// Transitional Bessel kernel at the hard edge: K_nu-weighted prefactor times
// int_0^1 t e^{-2 t^2 sh^2} J_nu(t zeta1) J_nu(t conj zeta2) dt, assembled in
// log scale (the K_nu factors underflow long before the kernel does). Same
// Hermitian conjugation convention as the sine kernel. zeta1, zeta2 != 0.
cplx kernel_bessel_interp(cplx zeta1, cplx zeta2, double sigma_hat, int nu);

// Limiting edge density profile erfc(xi) / (2 pi (1+tau)).
double density_erfc(double xi, double tau);

// sigma^2 * hatK_sigma(sigma zeta, sigma zeta), the density of the
// interpolating kernel deep in the non-Hermitian regime; approaches
// erfc(xi)/(4 pi) as sigma grows. Requires sigma >= 2.
double density_interp_large_sigma(cplx zeta, double sigma);

}  // namespace chiredge::limit
