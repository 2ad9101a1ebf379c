#include <random>

#include <benchmark/benchmark.h>

#include "qrotor/classical_map.hpp"
#include "qrotor/evolution.hpp"
#include "qrotor/wigner.hpp"

namespace {

qrotor::RotorState random_state(int l) {
    std::mt19937_64 rng(1);
    return qrotor::make_random_state(l, rng);
}

void BM_FluxEvolve(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    const auto psi = random_state(l);
    const auto alpha = qrotor::canonicalize(2, 5);
    std::int64_t j = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qrotor::flux_evolve(psi, qrotor::QuantizedTime(++j, 5, psi.dim()), alpha));
    }
    state.SetComplexityN(psi.dim());
}
BENCHMARK(BM_FluxEvolve)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_BuildWigner(benchmark::State& state) {
    const auto psi = random_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qrotor::build_wigner(psi));
    state.SetComplexityN(psi.dim());
}
BENCHMARK(BM_BuildWigner)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ShearTransport(benchmark::State& state) {
    const auto grid = qrotor::build_wigner(random_state(static_cast<int>(state.range(0))));
    std::int64_t j = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qrotor::shear_transport(grid, ++j, 1, {}));
}
BENCHMARK(BM_ShearTransport)->RangeMultiplier(2)->Range(4, 64);

void BM_TransportGrid(benchmark::State& state) {
    const auto rep = qrotor::representative(qrotor::build_wigner(random_state(static_cast<int>(state.range(0)))));
    std::int64_t j = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qrotor::transport_grid(rep, ++j));
}
BENCHMARK(BM_TransportGrid)->RangeMultiplier(2)->Range(4, 64);

void BM_RevivalScan(benchmark::State& state) {
    const auto psi = random_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qrotor::revival_scan(psi, psi.dim()));
}
BENCHMARK(BM_RevivalScan)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
