#include <benchmark/benchmark.h>

#include "qconc/codes.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/ketparse.hpp"
#include "qconc/state.hpp"
#include "qconc/wootters.hpp"

namespace {

using namespace qconc;

void BM_RandomPure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_pure(n, seed++));
    }
}
BENCHMARK(BM_RandomPure)->Arg(4)->Arg(8)->Arg(12);

void BM_ConcurrencePair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = random_pure(n, 7);
    const QubitSubset pair({1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence_r(psi, pair));
    }
}
BENCHMARK(BM_ConcurrencePair)->Arg(4)->Arg(8)->Arg(12);

void BM_AllConcurrences6Q4(benchmark::State& state) {
    const PureState psi = random_pure(6, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_concurrences(psi, 4));
    }
}
BENCHMARK(BM_AllConcurrences6Q4);

void BM_WoottersReduced(benchmark::State& state) {
    const PureState psi = random_pure(4, 7);
    const DensityMatrix reduced = partial_trace(DensityMatrix::from_pure(psi), QubitSubset({1, 2}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wootters_concurrence(reduced));
    }
}
BENCHMARK(BM_WoottersReduced);

void BM_PartialTrace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = DensityMatrix::from_pure(random_pure(n, 7));
    const QubitSubset keep({1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, keep));
    }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(6)->Arg(8);

void BM_SteaneReport(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_code("steane0", {2, 4, 6}));
    }
}
BENCHMARK(BM_SteaneReport);

void BM_ParseKet(benchmark::State& state) {
    const std::string text = format_ket(random_pure(6, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_ket(text));
    }
}
BENCHMARK(BM_ParseKet);

void BM_CanonicalPurification(benchmark::State& state) {
    const DensityMatrix rho =
        partial_trace(DensityMatrix::from_pure(random_pure(4, 7)), QubitSubset({1, 2}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_purification(rho));
    }
}
BENCHMARK(BM_CanonicalPurification);

} // namespace

BENCHMARK_MAIN();
