// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hamcon/constructions.hpp"
#include "hamcon/harness.hpp"
#include "hamcon/linegraph.hpp"
#include "hamcon/multigraph.hpp"
#include "hamcon/trails.hpp"

using namespace hamcon;

namespace {

void BM_VerifySerial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_enumerated_serial(n, Hypothesis::Thm1));
    }
}

void BM_VerifyParallel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_enumerated(n, Hypothesis::Thm1, 0));
    }
}

// L(Petersen): 15 vertices, hamiltonian-connected, so every pair is searched.
void BM_HamConnectedSerial(benchmark::State& state) {
    SimpleGraph g = line_graph(petersen().as_multigraph()).target;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_hamiltonian_connected_serial(g));
    }
}

void BM_HamConnectedParallel(benchmark::State& state) {
    SimpleGraph g = line_graph(petersen().as_multigraph()).target;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_hamiltonian_connected(g, 0));
    }
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HamConnectedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HamConnectedParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
