#include <benchmark/benchmark.h>

#include "nodal/grid.hpp"
#include "nodal/harmonics.hpp"
#include "nodal/topology.hpp"

using namespace nodal;

namespace {

SphereField bench_sphere() {
    return basis_harmonic(12, 5, Phase::Sin, Mat3::about_horizontal(0.3, 0.2)).field();
}

void BM_SphereSerial(benchmark::State& state) {
    const auto field = bench_sphere();
    for (auto _ : state) benchmark::DoNotOptimize(sample_sphere_serial(field, static_cast<int>(state.range(0))));
}

void BM_SphereParallel(benchmark::State& state) {
    const auto field = bench_sphere();
    for (auto _ : state) benchmark::DoNotOptimize(sample_sphere_parallel(field, static_cast<int>(state.range(0))));
}

void BM_DiscSerial(benchmark::State& state) {
    PlanarEigenSpec spec;
    const auto field = spec.field();
    for (auto _ : state) benchmark::DoNotOptimize(sample_disc_serial(field, static_cast<int>(state.range(0))));
}

void BM_DiscParallel(benchmark::State& state) {
    PlanarEigenSpec spec;
    const auto field = spec.field();
    for (auto _ : state) benchmark::DoNotOptimize(sample_disc_parallel(field, static_cast<int>(state.range(0))));
}

void BM_Analyze(benchmark::State& state) {
    const auto field = bench_sphere();
    const auto grid = sample(field, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(grid, field));
}

}  // namespace

BENCHMARK(BM_SphereSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscSerial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscParallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Analyze)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
