#include "sylrec/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sylrec {

SyllableGroup make_group(const SegmentedInput& input, std::size_t first_segment,
                         std::size_t last_segment) {
    const std::size_t p = input.segment_count();
    if (first_segment >= last_segment || last_segment > p)
        throw ValidationError("group: bad segment range [" +
                              std::to_string(first_segment) + ", " +
                              std::to_string(last_segment) + ") of " + std::to_string(p));
    auto segments = slice_segments(input.trajectory, input.boundaries);
    SyllableGroup group;
    group.segments.assign(segments.begin() + static_cast<std::ptrdiff_t>(first_segment),
                          segments.begin() + static_cast<std::ptrdiff_t>(last_segment));
    group.start_node = first_segment;
    group.end_node = last_segment;
    return group;
}

double frame_distance(std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size())
        throw ValidationError("frame distance: dimension mismatch " +
                              std::to_string(f.size()) + " vs " + std::to_string(g.size()));
    double sum = 0.0;
    for (std::size_t c = 0; c < f.size(); ++c) {
        const double d = f[c] - g[c];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double dtw_distance(const FrameSpan& a, const FrameSpan& b) {
    const std::size_t n = a.frame_count(), m = b.frame_count();
    if (n == 0 || m == 0) throw ValidationError("dtw: empty sequence");
    if (a.dim() != b.dim())
        throw ValidationError("dtw: dimension mismatch " + std::to_string(a.dim()) +
                              " vs " + std::to_string(b.dim()));

    constexpr double inf = std::numeric_limits<double>::infinity();
    // Two-row DP over the (n x m) cost lattice.
    std::vector<double> prev(m, inf), cur(m, inf);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double local = frame_distance(a.frame(i), b.frame(j));
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = inf;
                if (i > 0) best = std::min(best, prev[j]);
                if (j > 0) best = std::min(best, cur[j - 1]);
                if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
            }
            cur[j] = local + best;
        }
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

double dtw_distance(const Trajectory& a, const Trajectory& b) {
    return dtw_distance(FrameSpan(a), FrameSpan(b));
}

double syllable_distance(const SyllableGroup& group, const SyllablePattern& pattern) {
    if (group.segment_count() != pattern.segment_count())
        throw ValidationError("syllable distance: segment count mismatch (group " +
                              std::to_string(group.segment_count()) + ", pattern '" +
                              pattern.label + "' " +
                              std::to_string(pattern.segment_count()) + ")");
    const auto ref_segments = slice_segments(pattern.trajectory, pattern.boundaries);
    double total = 0.0;
    for (std::size_t l = 0; l < group.segments.size(); ++l)
        total += dtw_distance(group.segments[l], ref_segments[l]);
    return total;
}

PatternMatch best_pattern(const SyllableGroup& group, const Dictionary& dict) {
    const SyllablePattern* best = nullptr;
    std::size_t best_index = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dict.size(); ++k) {
        const auto& pattern = dict.at(k);
        if (pattern.segment_count() != group.segment_count()) continue;
        const double d = syllable_distance(group, pattern);
        if (best == nullptr || d < best_distance) {
            best = &pattern;
            best_index = k;
            best_distance = d;
        }
    }
    if (best == nullptr)
        throw NoApplicablePatternError("no dictionary pattern with " +
                                       std::to_string(group.segment_count()) +
                                       " segments");
    return PatternMatch{best, best_index, best_distance};
}

}  // namespace sylrec
