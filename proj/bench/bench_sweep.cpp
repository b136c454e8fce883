// Serial reference vs OpenMP kernels on the verification sweeps.

#include <benchmark/benchmark.h>

#include "kostka/kostka.hpp"
#include "kostka/sweep.hpp"

using namespace kostka;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) ? "parallel x" + std::to_string(parallel_threads()) : "serial");
}

void BM_KostkaAgreement(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_kostka_agreement(static_cast<int>(state.range(1)), exec_of(state)));
    label(state);
}
BENCHMARK(BM_KostkaAgreement)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

void BM_MuOracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_mu_oracle(static_cast<int>(state.range(1)), 4, exec_of(state)));
    label(state);
}
BENCHMARK(BM_MuOracle)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);

void BM_FunctionalEquation(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_functional_equation(static_cast<int>(state.range(1)), exec_of(state)));
    label(state);
}
BENCHMARK(BM_FunctionalEquation)->ArgsProduct({{0, 1}, {8}})->Unit(benchmark::kMillisecond);

void BM_StandardTableaux(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_standard_tableaux(static_cast<int>(state.range(1)), exec_of(state)));
    label(state);
}
BENCHMARK(BM_StandardTableaux)->ArgsProduct({{0, 1}, {10}})->Unit(benchmark::kMillisecond);

void BM_GordonSum(benchmark::State& state) {
    const int p = static_cast<int>(state.range(1));
    const int q = static_cast<int>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(gordon_sum(p, q, exec_of(state)));
    label(state);
}
BENCHMARK(BM_GordonSum)->ArgsProduct({{0, 1}, {3, 4}, {4}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
