#include <benchmark/benchmark.h>

#include "coshbar/oracle.hpp"
#include "coshbar/params.hpp"
#include "coshbar/propagator.hpp"
#include "coshbar/scattering.hpp"
#include "coshbar/special.hpp"

namespace {

using namespace coshbar;

PhysicalParams unit(double v8)
{
    PhysicalParams p;
    p.v0 = v8 / 8.0;
    return p;
}

void BM_LogGamma(benchmark::State& state)
{
    cplx z(0.3, -2.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(z));
        z += cplx(0.0, 1e-9);
    }
}
BENCHMARK(BM_LogGamma);

void BM_Hyp2f1(benchmark::State& state)
{
    const double z = static_cast<double>(state.range(0)) / 100.0;
    const cplx a(0.5, 1.0), b(-0.5, 1.0), c(1.0, -1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(a, b + 0.1, c, z));
}
BENCHMARK(BM_Hyp2f1)->Arg(20)->Arg(50)->Arg(90);

void BM_Amplitudes(benchmark::State& state)
{
    const BarrierIndex idx = reduce_dimensionless(2.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(amplitudes(idx));
}
BENCHMARK(BM_Amplitudes);

void BM_Wavefunction(benchmark::State& state)
{
    const PhysicalParams p = unit(2.0);
    const BarrierIndex idx = reduce(p, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(wavefunctions(idx, p, 0.7));
}
BENCHMARK(BM_Wavefunction);

void BM_Numerov(benchmark::State& state)
{
    const PhysicalParams p = unit(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(numerov_amplitudes(p, 1.0));
}
BENCHMARK(BM_Numerov)->Unit(benchmark::kMillisecond);

void BM_SpectralKernel(benchmark::State& state)
{
    const PhysicalParams p = unit(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_kernel(p, 0.5, -0.5, 1.0));
}
BENCHMARK(BM_SpectralKernel)->Unit(benchmark::kMillisecond);

void BM_GridHamiltonian(benchmark::State& state)
{
    const PhysicalParams p = unit(2.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(GridHamiltonian(p, 10.0, n).energies().front());
}
BENCHMARK(BM_GridHamiltonian)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
