#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sylrec/search.hpp"
#include "sylrec/types.hpp"

namespace sylrec {

/// Parameters for seeded synthetic dictionaries and inputs.
struct SynthConfig {
    std::uint64_t seed = 1;
    std::size_t syllable_count = 8;  // dictionary size N
    std::size_t parameter_dim = 1;
    std::vector<std::size_t> allowed_lengths{2, 3, 4};
    std::size_t frames_per_segment_min = 3;
    std::size_t frames_per_segment_max = 8;
    double noise_sigma = 0.0;
};

struct GeneratedInput {
    SegmentedInput input;
    std::vector<std::string> truth_labels;
};

struct StrategySummary {
    double mean_cost = 0.0;
    double median_cost = 0.0;
    double mean_arcs_evaluated = 0.0;
    double mean_nodes_expanded = 0.0;
    double mean_wall_time_seconds = 0.0;
    double label_accuracy = 0.0;  // position-wise match rate vs ground truth
};

struct ModelSummary {
    double mean_sigma2 = 0.0;             // channel-averaged deformation
    double mean_junction_residual = 0.0;  // averaged over junctions and channels
    double mean_info_distance = 0.0;      // DTW(input, stitched reference)
};

struct ExperimentReport {
    std::size_t instance_count = 0;
    std::map<std::string, StrategySummary> per_strategy;
    std::map<std::string, ModelSummary> per_model;
};

/// N random patterns, deterministic in cfg.seed. Per pattern: segment count
/// drawn from allowed_lengths, per-segment frame count from the configured
/// range, and each segment channel traced by a cubic with coefficients drawn
/// uniformly from [-1, 1], evaluated on an equispaced [0, 1] grid.
Dictionary gen_synthetic_dictionary(const SynthConfig& cfg);

/// Samples `syllable_count` patterns uniformly with replacement, concatenates
/// their trajectories and boundaries, and perturbs every value with zero-mean
/// Gaussian noise of the given sigma. Deterministic in the seed.
GeneratedInput gen_input(const Dictionary& dict, std::uint64_t seed,
                         std::size_t syllable_count, double noise_sigma);

/// Dynamic-programming minimum path cost over the lattice; independent check
/// of search_full. Shares the graph's memoized weights, so agreement with
/// search_full is exact.
double oracle_shortest_path(const SynthesisGraph& graph);

/// Runs every strategy and model over seeded instances and aggregates. Hard
/// invariants (full-search optimality vs the oracle, cost ordering, lazy
/// evaluation savings) are asserted per instance; comparative findings are
/// reported, not asserted.
ExperimentReport compare_strategies(const SynthConfig& cfg, std::size_t instance_count);

}  // namespace sylrec
