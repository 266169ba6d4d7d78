#include "sylrec/types.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

namespace sylrec {

namespace {

std::string index_str(std::size_t i) { return std::to_string(i); }

}  // namespace

Trajectory::Trajectory(std::vector<double> values, std::size_t dim)
    : values_(std::move(values)), dim_(dim) {
    if (dim_ == 0) throw ValidationError("trajectory: parameter dimension must be >= 1");
    if (values_.empty()) throw ValidationError("trajectory: empty frame sequence");
    if (values_.size() % dim_ != 0)
        throw ValidationError("trajectory: value count " + index_str(values_.size()) +
                              " is not a multiple of dimension " + index_str(dim_));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw ValidationError("trajectory: non-finite value at frame " +
                                  index_str(i / dim_) + " channel " + index_str(i % dim_));
    }
}

Trajectory validate_trajectory(const std::vector<std::vector<double>>& frames) {
    if (frames.empty()) throw ValidationError("trajectory: empty frame sequence");
    const std::size_t dim = frames[0].size();
    if (dim == 0) throw ValidationError("trajectory: empty frame 0");
    std::vector<double> flat;
    flat.reserve(frames.size() * dim);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (frames[i].size() != dim)
            throw ValidationError("trajectory: ragged at frame " + index_str(i) +
                                  " (got " + index_str(frames[i].size()) +
                                  " values, expected " + index_str(dim) + ")");
        flat.insert(flat.end(), frames[i].begin(), frames[i].end());
    }
    return Trajectory(std::move(flat), dim);
}

SegmentBoundaries::SegmentBoundaries(std::vector<std::size_t> starts,
                                     std::size_t frame_count)
    : starts_(std::move(starts)), frame_count_(frame_count) {
    if (frame_count_ == 0) throw ValidationError("boundaries: zero frame count");
    if (starts_.empty()) throw ValidationError("boundaries: empty start list");
    if (starts_[0] != 0)
        throw ValidationError("boundaries: first start must be 0, got " +
                              index_str(starts_[0]));
    for (std::size_t j = 1; j < starts_.size(); ++j) {
        if (starts_[j] <= starts_[j - 1])
            throw ValidationError("boundaries: starts not strictly increasing at index " +
                                  index_str(j));
    }
    if (starts_.back() >= frame_count_)
        throw ValidationError("boundaries: start " + index_str(starts_.back()) +
                              " >= frame count " + index_str(frame_count_) +
                              " (empty last segment)");
}

SyllablePattern SyllablePattern::make(std::string label,
                                      std::vector<std::string> phonemes,
                                      Trajectory trajectory,
                                      std::vector<std::size_t> starts) {
    SegmentBoundaries bounds(std::move(starts), trajectory.frame_count());
    if (phonemes.size() != bounds.segment_count())
        throw ValidationError("syllable '" + label + "': " +
                              index_str(phonemes.size()) + " phoneme labels vs " +
                              index_str(bounds.segment_count()) + " segments");
    return SyllablePattern{std::move(label), std::move(phonemes),
                           std::move(trajectory), std::move(bounds)};
}

Dictionary::Dictionary(std::vector<SyllablePattern> syllables)
    : syllables_(std::move(syllables)), dim_(0) {
    if (syllables_.empty()) throw ValidationError("dictionary: no syllables");
    dim_ = syllables_[0].trajectory.dim();
    std::unordered_set<std::string_view> labels;
    for (const auto& s : syllables_) {
        if (s.trajectory.dim() != dim_)
            throw ValidationError("dictionary: syllable '" + s.label +
                                  "' has dimension " + index_str(s.trajectory.dim()) +
                                  ", expected " + index_str(dim_));
        if (!labels.insert(s.label).second)
            throw ValidationError("dictionary: duplicate label '" + s.label + "'");
    }
}

const SyllablePattern* Dictionary::find(std::string_view label) const {
    for (const auto& s : syllables_)
        if (s.label == label) return &s;
    return nullptr;
}

SegmentedInput SegmentedInput::make(Trajectory trajectory,
                                    std::vector<std::size_t> starts) {
    SegmentBoundaries bounds(std::move(starts), trajectory.frame_count());
    return SegmentedInput{std::move(trajectory), std::move(bounds)};
}

std::vector<FrameSpan> slice_segments(const Trajectory& traj,
                                      const SegmentBoundaries& bounds) {
    if (bounds.frame_count() != traj.frame_count())
        throw ValidationError("slice: boundaries built for " +
                              index_str(bounds.frame_count()) + " frames, trajectory has " +
                              index_str(traj.frame_count()));
    std::vector<FrameSpan> out;
    out.reserve(bounds.segment_count());
    for (std::size_t j = 0; j < bounds.segment_count(); ++j) {
        const std::size_t b = bounds.begin(j), e = bounds.end(j);
        out.emplace_back(traj.values().data() + b * traj.dim(), e - b, traj.dim());
    }
    return out;
}

std::vector<const SyllablePattern*> dictionary_by_length(const Dictionary& dict,
                                                         std::size_t n) {
    std::vector<const SyllablePattern*> out;
    for (const auto& s : dict.syllables())
        if (s.segment_count() == n) out.push_back(&s);
    return out;
}

}  // namespace sylrec
