#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sylrec/harness.hpp"
#include "sylrec/recognizer.hpp"
#include "sylrec/types.hpp"

namespace sylrec::io {

// Canonical JSON file formats. Dictionaries:
//   {"parameter_dim": P, "syllables": [{"label": ..., "phonemes": [...],
//    "frames": [[...], ...], "boundaries": [0, ...]}, ...]}
// Inputs:
//   {"parameter_dim": P, "frames": [[...], ...], "boundaries": [0, ...]}
// Numbers are serialized with full round-trip precision and object keys are
// sorted, so identical data produces identical bytes.

std::string serialize_dictionary(const Dictionary& dict);
Dictionary parse_dictionary(const std::string& text);
Dictionary load_dictionary(const std::filesystem::path& path);
void save_dictionary(const std::filesystem::path& path, const Dictionary& dict);

std::string serialize_input(const SegmentedInput& input);
SegmentedInput parse_input(const std::string& text);
SegmentedInput load_input(const std::filesystem::path& path);
void save_input(const std::filesystem::path& path, const SegmentedInput& input);

/// Recognition report. Wall time is deliberately omitted so identical inputs
/// produce byte-identical reports; it is printed on the human-readable side.
std::string recognition_report_json(const RecognitionResult& result);

/// Stitch-only report (coefficients, deformation, residuals, fallbacks).
std::string stitch_report_json(const StitchResult& result,
                               const std::vector<std::string>& labels);

/// Experiment report plus the configuration that produced it. Wall-time
/// means are omitted for the same reproducibility reason.
std::string experiment_report_json(const ExperimentReport& report,
                                   const SynthConfig& cfg);

/// Path enumeration listing for `enumerate`.
std::string enumeration_json(std::size_t segments,
                             const std::vector<std::size_t>& lengths,
                             const std::vector<std::vector<std::size_t>>& paths);

std::string truth_labels_json(const std::vector<std::string>& labels);

/// One frame per line, channels comma-separated, shortest round-trip digits.
std::string stitched_csv(const Trajectory& traj);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sylrec::io
