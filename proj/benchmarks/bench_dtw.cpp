#include <benchmark/benchmark.h>

#include "sylrec/compare.hpp"
#include "sylrec/rng.hpp"

namespace {

sylrec::Trajectory random_trajectory(std::uint64_t seed, std::size_t frames,
                                     std::size_t dim) {
    sylrec::SeededRng rng(seed);
    std::vector<double> values(frames * dim);
    for (double& v : values) v = rng.uniform(-1.0, 1.0);
    return sylrec::Trajectory(std::move(values), dim);
}

void BM_dtw(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_trajectory(1, n, 2);
    const auto b = random_trajectory(2, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sylrec::dtw_distance(a, b));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_dtw)->Range(16, 256)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
