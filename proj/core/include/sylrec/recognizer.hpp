#pragma once

#include "sylrec/search.hpp"
#include "sylrec/stitching.hpp"
#include "sylrec/types.hpp"

namespace sylrec {

/// Full pipeline output: the chosen syllable sequence, its distances, and the
/// smooth reference trajectory stitched from the chosen patterns.
struct RecognitionResult {
    std::vector<std::string> labels;
    std::vector<double> per_syllable_distances;
    double total_distance = 0.0;
    StitchResult stitched;
    SearchStrategy strategy;
    StitchModel model;
    SearchStats stats;
    double wall_time_seconds = 0.0;
    /// DTW between the input and the stitched reference, reported for
    /// information; nothing optimizes it.
    double info_distance = 0.0;
};

/// Builds the synthesis graph, runs the strategy, and stitches the chosen
/// patterns with the model. Deterministic in all inputs. Throws NoPathError
/// when the input's segment count is not expressible in available syllable
/// lengths, ValidationError on dimension mismatch.
RecognitionResult recognize(const SegmentedInput& input, const Dictionary& dict,
                            SearchStrategy strategy = SearchStrategy::full,
                            StitchModel model = StitchModel::linear);

/// Sum of hop weights.
double total_distance(const SolutionPath& path);

}  // namespace sylrec
