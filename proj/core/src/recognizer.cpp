#include "sylrec/recognizer.hpp"

#include <chrono>

#include "sylrec/compare.hpp"

namespace sylrec {

double total_distance(const SolutionPath& path) {
    double total = 0.0;
    for (double w : path.hop_weights) total += w;
    return total;
}

RecognitionResult recognize(const SegmentedInput& input, const Dictionary& dict,
                            SearchStrategy strategy, StitchModel model) {
    const auto t0 = std::chrono::steady_clock::now();

    SynthesisGraph graph(input, dict);
    SolutionPath path = run_search(graph, strategy);

    std::vector<Trajectory> chosen;
    chosen.reserve(path.pattern_indices.size());
    for (std::size_t idx : path.pattern_indices)
        chosen.push_back(dict.at(idx).trajectory);
    StitchResult stitched = stitch(chosen, model);

    const double info = dtw_distance(input.trajectory, stitched.stitched);
    const auto t1 = std::chrono::steady_clock::now();

    RecognitionResult result{std::move(path.labels),
                             std::move(path.hop_weights),
                             path.cost,
                             std::move(stitched),
                             strategy,
                             model,
                             path.stats,
                             std::chrono::duration<double>(t1 - t0).count(),
                             info};
    return result;
}

}  // namespace sylrec
