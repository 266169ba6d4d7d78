#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sylrec/compare.hpp"
#include "sylrec/types.hpp"

namespace sylrec {

enum class SearchStrategy { full, dfs, bfs };

const char* to_string(SearchStrategy strategy);
std::optional<SearchStrategy> strategy_from_string(std::string_view name);

struct ArcInfo {
    double weight;              // minimal syllable distance over the dictionary
    std::size_t pattern_index;  // winning pattern's dictionary position
};

struct SearchStats {
    std::uint64_t arcs_evaluated = 0;  // distinct arc weights computed by this call
    std::uint64_t nodes_expanded = 0;  // nodes whose successors were generated
};

/// Lattice over input segment boundaries 0..p. An arc (i, n) places one
/// dictionary syllable over input segments [i, i+n); it exists when the
/// dictionary holds patterns of n segments and i+n <= p. Arc weights (the
/// best pattern and its distance) are computed on first query and memoized;
/// repeated queries return the identical stored value. The memo fill is
/// idempotent, so concurrent queries are safe.
class SynthesisGraph {
public:
    /// The input and dictionary must outlive the graph.
    SynthesisGraph(const SegmentedInput& input, const Dictionary& dict);

    std::size_t segment_count() const { return input_->segment_count(); }  // p
    std::size_t node_count() const { return segment_count() + 1; }
    const std::vector<std::size_t>& allowed_lengths() const { return lengths_; }
    bool has_arc(std::size_t from, std::size_t length) const;
    ArcInfo arc(std::size_t from, std::size_t length) const;
    /// Total distinct arcs evaluated on this graph so far.
    std::uint64_t arcs_evaluated() const;
    const Dictionary& dictionary() const { return *dict_; }
    const SegmentedInput& input() const { return *input_; }

private:
    const SegmentedInput* input_;
    const Dictionary* dict_;
    std::vector<std::size_t> lengths_;  // ascending, unique
    std::vector<FrameSpan> segments_;   // input segments, sliced once
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, ArcInfo> memo_;
    mutable std::uint64_t evaluations_ = 0;
};

/// A complete root-to-goal placement of syllables over the input.
struct SolutionPath {
    std::vector<std::size_t> nodes;            // 0 = v_0 < ... < v_M = p
    std::vector<std::string> labels;           // chosen pattern per hop
    std::vector<std::size_t> pattern_indices;  // dictionary position per hop
    std::vector<double> hop_weights;
    double cost = 0.0;  // sum of hop weights
    SearchStats stats;

    std::size_t hop_count() const { return labels.size(); }
};

/// Number of ordered compositions of p into parts drawn from `lengths`,
/// via C(0) = 1, C(p) = sum over n of C(p - n).
std::uint64_t count_compositions(std::size_t p, const std::vector<std::size_t>& lengths);

/// All compositions of p as node sequences 0 = v_0 < ... < p, in lexicographic
/// order. p = 0 yields one empty path.
std::vector<std::vector<std::size_t>> enumerate_compositions(
    std::size_t p, const std::vector<std::size_t>& lengths);

/// All complete node sequences through existing arcs, lexicographic.
std::vector<std::vector<std::size_t>> enumerate_paths(const SynthesisGraph& graph);

/// Exhaustive search: evaluates every complete path and returns the cheapest;
/// cost ties break toward the lexicographically smaller node sequence.
SolutionPath search_full(const SynthesisGraph& graph);

/// Depth-first search from node 0, successors in ascending length order;
/// returns the first complete path found. A candidate, not necessarily the
/// optimum. Arc weights are computed only for the returned hops.
SolutionPath search_dfs(const SynthesisGraph& graph);

/// Breadth-first search, queue seeded with node 0's successors in ascending
/// length order; returns the first complete path dequeued. Minimizes hop
/// count, not cost.
SolutionPath search_bfs(const SynthesisGraph& graph);

SolutionPath run_search(const SynthesisGraph& graph, SearchStrategy strategy);

}  // namespace sylrec
