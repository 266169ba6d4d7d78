#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sylrec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data that violates a documented invariant (bad file, ragged frames,
/// inconsistent boundaries, dimension mismatch, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The synthesis graph has no complete path from node 0 to node p.
class NoPathError : public Error {
public:
    using Error::Error;
};

/// Time-ordered sequence of frames, each frame holding `dim` real-valued
/// parameters. Stored as one contiguous row-major buffer. Immutable after
/// construction; all values are finite.
class Trajectory {
public:
    /// Takes a flat row-major buffer. Throws ValidationError if the buffer is
    /// empty, its size is not a multiple of `dim`, or any value is non-finite.
    Trajectory(std::vector<double> values, std::size_t dim);

    std::size_t frame_count() const { return values_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    std::span<const double> frame(std::size_t i) const {
        return {values_.data() + i * dim_, dim_};
    }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
    std::size_t dim_;
};

/// Validates a nested frame list and packs it into a Trajectory. Errors name
/// the offending frame: empty input, ragged dimensions, non-finite values.
Trajectory validate_trajectory(const std::vector<std::vector<double>>& frames);

/// Non-owning view of a contiguous run of frames inside a Trajectory.
class FrameSpan {
public:
    FrameSpan(const double* data, std::size_t frames, std::size_t dim)
        : data_(data), frames_(frames), dim_(dim) {}
    explicit FrameSpan(const Trajectory& traj)
        : FrameSpan(traj.values().data(), traj.frame_count(), traj.dim()) {}

    std::size_t frame_count() const { return frames_; }
    std::size_t dim() const { return dim_; }
    std::span<const double> frame(std::size_t i) const {
        return {data_ + i * dim_, dim_};
    }

private:
    const double* data_;
    std::size_t frames_;
    std::size_t dim_;
};

/// Segment start indices over a trajectory of `frame_count` frames. Segment j
/// covers frames [starts[j], starts[j+1]); the last segment runs to the end.
/// Starts are strictly increasing, begin at 0, and stay below frame_count, so
/// every segment is nonempty.
class SegmentBoundaries {
public:
    SegmentBoundaries(std::vector<std::size_t> starts, std::size_t frame_count);

    std::size_t segment_count() const { return starts_.size(); }
    std::size_t frame_count() const { return frame_count_; }
    std::size_t begin(std::size_t j) const { return starts_[j]; }
    std::size_t end(std::size_t j) const {
        return j + 1 < starts_.size() ? starts_[j + 1] : frame_count_;
    }
    const std::vector<std::size_t>& starts() const { return starts_; }

private:
    std::vector<std::size_t> starts_;
    std::size_t frame_count_;
};

/// A dictionary entry: a labeled reference trajectory split into one segment
/// per phoneme.
struct SyllablePattern {
    std::string label;
    std::vector<std::string> phonemes;
    Trajectory trajectory;
    SegmentBoundaries boundaries;

    static SyllablePattern make(std::string label,
                                std::vector<std::string> phonemes,
                                Trajectory trajectory,
                                std::vector<std::size_t> starts);

    std::size_t segment_count() const { return boundaries.segment_count(); }
};

/// Immutable set of syllable patterns sharing one parameter dimension, with
/// unique labels. Pattern order is the tie-breaking order everywhere.
class Dictionary {
public:
    explicit Dictionary(std::vector<SyllablePattern> syllables);

    std::size_t size() const { return syllables_.size(); }
    std::size_t parameter_dim() const { return dim_; }
    const std::vector<SyllablePattern>& syllables() const { return syllables_; }
    const SyllablePattern& at(std::size_t i) const { return syllables_[i]; }
    /// Returns nullptr if no pattern carries the label.
    const SyllablePattern* find(std::string_view label) const;

private:
    std::vector<SyllablePattern> syllables_;
    std::size_t dim_;
};

/// An input trajectory already segmented into p phoneme segments.
struct SegmentedInput {
    Trajectory trajectory;
    SegmentBoundaries boundaries;

    static SegmentedInput make(Trajectory trajectory,
                               std::vector<std::size_t> starts);

    std::size_t segment_count() const { return boundaries.segment_count(); }
};

/// Splits a trajectory into contiguous, non-overlapping, exhaustive segment
/// views. Throws if the boundaries were built for a different frame count.
std::vector<FrameSpan> slice_segments(const Trajectory& traj,
                                      const SegmentBoundaries& bounds);

/// All patterns with exactly n segments, in dictionary order.
std::vector<const SyllablePattern*> dictionary_by_length(const Dictionary& dict,
                                                         std::size_t n);

}  // namespace sylrec
