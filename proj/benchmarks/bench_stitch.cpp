#include <benchmark/benchmark.h>

#include "sylrec/rng.hpp"
#include "sylrec/stitching.hpp"

namespace {

std::vector<sylrec::Trajectory> random_syllables(std::size_t count, std::size_t frames,
                                                 std::size_t dim) {
    sylrec::SeededRng rng(13);
    std::vector<sylrec::Trajectory> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<double> values(frames * dim);
        for (double& v : values) v = rng.uniform(-1.0, 1.0);
        out.emplace_back(std::move(values), dim);
    }
    return out;
}

void BM_stitch_linear(benchmark::State& state) {
    const auto ys = random_syllables(static_cast<std::size_t>(state.range(0)), 12, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sylrec::stitch(ys, sylrec::StitchModel::linear));
}

void BM_stitch_quadratic(benchmark::State& state) {
    const auto ys = random_syllables(static_cast<std::size_t>(state.range(0)), 12, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sylrec::stitch(ys, sylrec::StitchModel::quadratic));
}

}  // namespace

BENCHMARK(BM_stitch_linear)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(BM_stitch_quadratic)->Arg(2)->Arg(4)->Arg(8);
