#include <benchmark/benchmark.h>

#include "toric/bases.hpp"
#include "toric/groebner.hpp"
#include "toric/robustness.hpp"

using namespace toric;

namespace {

const IntMatrix kT789{{7, 8, 9}};
const IntMatrix kT24{{12, 9, 8, 0}, {0, 3, 4, 12}};

void BM_Graver789(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(graver(kT789));
}
BENCHMARK(BM_Graver789);

void BM_GraverLambda24(benchmark::State& state) {
    IntMatrix a = lambda_omega(kT24, {2, 4});
    for (auto _ : state) benchmark::DoNotOptimize(graver(a));
}
BENCHMARK(BM_GraverLambda24);

void BM_Indispensable789(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(indispensable_set(kT789));
}
BENCHMARK(BM_Indispensable789);

void BM_MinimalMarkovLambda24(benchmark::State& state) {
    IntMatrix a = lambda_omega(kT24, {2, 4});
    for (auto _ : state) benchmark::DoNotOptimize(minimal_markov(a));
}
BENCHMARK(BM_MinimalMarkovLambda24);

void BM_DeltaGeneric(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(delta_complex(kT24, false));
}
BENCHMARK(BM_DeltaGeneric);

void BM_DeltaCodim2Fast(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(delta_complex(kT24, true));
}
BENCHMARK(BM_DeltaCodim2Fast);

void BM_HilbertBasisCone(benchmark::State& state) {
    const long spread = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_basis_2d(Vec2{1, 0}, Vec2{1, spread}));
}
BENCHMARK(BM_HilbertBasisCone)->Arg(5)->Arg(20)->Arg(60);

void BM_ReducedGroebner789(benchmark::State& state) {
    WeightOrder w{RVec(3, Rat(1))};
    for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner(kT789, w));
}
BENCHMARK(BM_ReducedGroebner789);

void BM_FiberEnumerate789(benchmark::State& state) {
    GradingCertificate y = require_grading(kT789);
    FiberEnumerator fibers(kT789, y);
    const long deg = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fibers.enumerate(IVec{deg}));
}
BENCHMARK(BM_FiberEnumerate789)->Arg(72)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
