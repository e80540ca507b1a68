#include <benchmark/benchmark.h>

#include <complex>

#include "hgs/apollonius.hpp"
#include "hgs/loops.hpp"
#include "hgs/schottky.hpp"
#include "hgs/special.hpp"

using namespace hgs;

namespace {

const HGParams kParams = AngleTriple{0.2, 1.1, 0.7}.params();

void BM_ComplexGamma(benchmark::State& state) {
    Complex z(0.5, -1.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(complex_gamma(z));
        z += Complex(1e-12, 1e-12);  // defeat value caching
    }
}
BENCHMARK(BM_ComplexGamma);

void BM_CircuitMatrices(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(circuit_matrices(kParams));
}
BENCHMARK(BM_CircuitMatrices);

void BM_NormalizedSystem(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(normalized_system_direct(kParams));
}
BENCHMARK(BM_NormalizedSystem);

void BM_MapDisk(benchmark::State& state) {
    MoebiusMap m(Complex(1.2, 0.3), Complex(0.1, -0.2), Complex(0.05, 0.4), Complex(0.9, -0.1));
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(Complex(0.4, -0.7), 0.8);
    for (auto _ : state) benchmark::DoNotOptimize(map_disk(m, d));
}
BENCHMARK(BM_MapDisk);

void BM_Certify(benchmark::State& state) {
    SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    for (auto _ : state) benchmark::DoNotOptimize(certify(cfg));
}
BENCHMARK(BM_Certify);

void BM_ConcentricCenters(benchmark::State& state) {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(0.0, 1.0);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(5.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(concentric_centers(d, dp));
}
BENCHMARK(BM_ConcentricCenters);

void BM_PhiPsiSolve(benchmark::State& state) {
    LoopProfile p = LoopProfile::defaults(LoopKind::AlphaAroundD0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_phi_psi(p, 1.0));
}
BENCHMARK(BM_PhiPsiSolve);

void BM_SampleConfig(benchmark::State& state) {
    LoopProfile p = LoopProfile::defaults(LoopKind::MultiplierGamma2);
    for (auto _ : state) benchmark::DoNotOptimize(sample_config(LoopKind::MultiplierGamma2, p, 0.37));
}
BENCHMARK(BM_SampleConfig);

void BM_OrbitSample(benchmark::State& state) {
    SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_sample(cfg, static_cast<int>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrbitSample)->Arg(2)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
