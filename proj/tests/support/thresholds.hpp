#pragma once

// Monte Carlo pass thresholds. The limit theorems come with no rates, so
// each bound is an engineering choice: the finite-size bias was measured at
// two sizes (recorded next to each constant) and the bound sits far enough
// above the measured value plus sampling noise to trip on regressions, not
// on luck of the seed.
namespace fixtures {

// interpolating regime, tau = 1 - (2n)^{-1/3} so sigma_n ~ 1
inline constexpr double ks_interp_full = 0.08;   // n = 150, 2000 trials
inline constexpr double ks_interp_smoke = 0.15;  // n = 100, 300 trials

// gumbel regime, tau = 0.25; convergence is logarithmic in n: integrating
// the exact finite-n kernel puts the Poisson-surrogate CDF bias near 0.18 at
// t = 0 for every reachable n (n = 100: 0.184, n = 400: 0.181), and the
// measured MC KS is 0.1615 at n = 100 (400 trials) and 0.1615 at n = 200
// (500 trials, seed 1), so the smoke bracket tracks the finite-n value
inline constexpr double ks_gumbel_full = 0.10;   // n = 200, 5000 trials
inline constexpr double ks_gumbel_smoke = 0.20;  // n = 100, 400 trials

// Poisson mean/variance ratio window on the box [0,1] x [-1,1]
inline constexpr double poisson_ratio_lo_full = 0.85;   // n = 200, 5000 trials
inline constexpr double poisson_ratio_hi_full = 1.15;
inline constexpr double poisson_ratio_lo_smoke = 0.70;  // n = 100, 250 trials
inline constexpr double poisson_ratio_hi_smoke = 1.30;

// mean count over xi > 0 (box [0,30] x [-8,8]): finite-n plateau is 0.59 to
// 0.60 for n in [100, 400] by exact kernel integration, against a limit of 1;
// 250-trial sampling noise is 0.05 one sigma
inline constexpr double poisson_wide_mean_lo = 0.40;  // n = 100, 250 trials
inline constexpr double poisson_wide_mean_hi = 0.85;

// edge histogram vs the erfc profile at n = 200, tau = 0.5, 500 trials:
// the five-bin bulk mass holds ~500 points (4.5% noise), a single bin ~110
// (9.5% noise), so the single-bin band is 2.6 sigma where the mass band is 2.2
inline constexpr double histogram_mass_rel = 0.10;
inline constexpr double histogram_bulk_rel = 0.25;

}  // namespace fixtures
