#include <benchmark/benchmark.h>

#include "sylrec/harness.hpp"
#include "sylrec/search.hpp"

namespace {

struct Instance {
    sylrec::Dictionary dict;
    sylrec::GeneratedInput gi;
};

Instance make_instance(std::size_t syllables_in_input) {
    sylrec::SynthConfig cfg;
    cfg.seed = 7;
    cfg.syllable_count = 16;
    cfg.parameter_dim = 2;
    cfg.frames_per_segment_min = 4;
    cfg.frames_per_segment_max = 8;
    sylrec::Dictionary dict = sylrec::gen_synthetic_dictionary(cfg);
    sylrec::GeneratedInput gi = sylrec::gen_input(dict, 99, syllables_in_input, 0.3);
    return Instance{std::move(dict), std::move(gi)};
}

void run_strategy(benchmark::State& state, sylrec::SearchStrategy strategy) {
    const Instance instance = make_instance(static_cast<std::size_t>(state.range(0)));
    std::uint64_t arcs = 0;
    for (auto _ : state) {
        // A fresh graph per iteration: memoized weights are the dominant cost
        // being compared across strategies.
        sylrec::SynthesisGraph graph(instance.gi.input, instance.dict);
        const auto path = sylrec::run_search(graph, strategy);
        benchmark::DoNotOptimize(path.cost);
        arcs += path.stats.arcs_evaluated;
    }
    state.counters["arcs"] =
        benchmark::Counter(static_cast<double>(arcs), benchmark::Counter::kAvgIterations);
}

void BM_search_full(benchmark::State& state) {
    run_strategy(state, sylrec::SearchStrategy::full);
}
void BM_search_dfs(benchmark::State& state) {
    run_strategy(state, sylrec::SearchStrategy::dfs);
}
void BM_search_bfs(benchmark::State& state) {
    run_strategy(state, sylrec::SearchStrategy::bfs);
}

}  // namespace

BENCHMARK(BM_search_full)->Arg(3)->Arg(4);
BENCHMARK(BM_search_dfs)->Arg(3)->Arg(4);
BENCHMARK(BM_search_bfs)->Arg(3)->Arg(4);
