#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sylrec/types.hpp"

namespace sylrec {

/// best_pattern found no dictionary entry with a matching segment count; the
/// corresponding synthesis-graph arc does not exist.
class NoApplicablePatternError : public Error {
public:
    using Error::Error;
};

/// A run of consecutive input segments treated as one candidate syllable.
/// start_node/end_node are the input boundary indices the run spans.
struct SyllableGroup {
    std::vector<FrameSpan> segments;
    std::size_t start_node = 0;
    std::size_t end_node = 0;

    std::size_t segment_count() const { return segments.size(); }
};

/// Groups input segments [first_segment, last_segment).
SyllableGroup make_group(const SegmentedInput& input, std::size_t first_segment,
                         std::size_t last_segment);

/// Euclidean distance between two frames of equal dimension.
double frame_distance(std::span<const double> f, std::span<const double> g);

/// Unnormalized dynamic-time-warping distance: minimal cumulative frame
/// distance over monotone alignments with steps (1,0), (0,1), (1,1), anchored
/// at both sequence ends.
double dtw_distance(const FrameSpan& a, const FrameSpan& b);
double dtw_distance(const Trajectory& a, const Trajectory& b);

/// Sum of dtw_distance over in-order segment pairs. The group and pattern
/// must have the same segment count.
double syllable_distance(const SyllableGroup& group, const SyllablePattern& pattern);

struct PatternMatch {
    const SyllablePattern* pattern;
    std::size_t index;  // position in the dictionary
    double distance;
};

/// The dictionary pattern with minimal syllable_distance to the group. Ties
/// break toward the earlier dictionary position. Throws
/// NoApplicablePatternError if no pattern has the group's segment count.
PatternMatch best_pattern(const SyllableGroup& group, const Dictionary& dict);

}  // namespace sylrec
