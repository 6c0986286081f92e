#include <benchmark/benchmark.h>

#include <complex>

#include "chiredge/ensemble.hpp"
#include "chiredge/fredholm.hpp"
#include "chiredge/kernels_finite.hpp"
#include "chiredge/kernels_limit.hpp"

using cplx = std::complex<double>;
namespace ens = chiredge::ensemble;

static void BM_kernel_finite(benchmark::State& state) {
    const ens::EnsembleParams p{static_cast<int>(state.range(0)), 0, 0.5};
    const cplx z1(2.26, 0.02), z2(2.24, -0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(chiredge::finite::kernel_finite(p, z1, z2));
}
BENCHMARK(BM_kernel_finite)->Arg(50)->Arg(200)->Arg(1000);

static void BM_kernel_contour(benchmark::State& state) {
    const ens::EnsembleParams p{static_cast<int>(state.range(0)), 0, 0.5};
    const cplx z1(2.26, 0.02), z2(2.24, -0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(chiredge::finite::kernel_contour(p, z1, z2));
}
BENCHMARK(BM_kernel_contour)->Arg(8)->Arg(16);

static void BM_airy_interp_real(benchmark::State& state) {
    const cplx z1(0.3, 0.4), z2(-0.2, -0.1);
    const double sigma = state.range(0) / 4.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            chiredge::limit::kernel_airy_interp_real(z1, z2, sigma));
}
BENCHMARK(BM_airy_interp_real)->Arg(2)->Arg(4)->Arg(8);

static void BM_airy_interp_contour(benchmark::State& state) {
    const cplx z1(0.3, 0.4), z2(-0.2, -0.1);
    const double sigma = state.range(0) / 4.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            chiredge::limit::kernel_airy_interp_contour(z1, z2, sigma));
}
BENCHMARK(BM_airy_interp_contour)->Arg(2)->Arg(4)->Arg(8);

static void BM_last_particle_cdf(benchmark::State& state) {
    chiredge::fredholm::FredholmConfig cfg;
    cfg.m_xi = static_cast<int>(state.range(0));
    cfg.m_eta = cfg.m_xi / 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            chiredge::fredholm::last_particle_cdf(1.0, 0.0, cfg));
}
BENCHMARK(BM_last_particle_cdf)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_eigensolve(benchmark::State& state) {
    const ens::EnsembleParams p{static_cast<int>(state.range(0)), 0, 0.5};
    std::uint64_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ens::eigenvalues(ens::sample_dirac(p, 1, trial++)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_eigensolve)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

BENCHMARK_MAIN();
