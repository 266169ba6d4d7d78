#include "sylrec/search.hpp"

#include <algorithm>
#include <deque>

namespace sylrec {

const char* to_string(SearchStrategy strategy) {
    switch (strategy) {
        case SearchStrategy::full: return "full";
        case SearchStrategy::dfs: return "dfs";
        case SearchStrategy::bfs: return "bfs";
    }
    return "?";
}

std::optional<SearchStrategy> strategy_from_string(std::string_view name) {
    if (name == "full") return SearchStrategy::full;
    if (name == "dfs") return SearchStrategy::dfs;
    if (name == "bfs") return SearchStrategy::bfs;
    return std::nullopt;
}

SynthesisGraph::SynthesisGraph(const SegmentedInput& input, const Dictionary& dict)
    : input_(&input), dict_(&dict) {
    if (input.trajectory.dim() != dict.parameter_dim())
        throw ValidationError("graph: input dimension " +
                              std::to_string(input.trajectory.dim()) +
                              " vs dictionary dimension " +
                              std::to_string(dict.parameter_dim()));
    for (const auto& s : dict.syllables()) lengths_.push_back(s.segment_count());
    std::sort(lengths_.begin(), lengths_.end());
    lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
    segments_ = slice_segments(input.trajectory, input.boundaries);
}

bool SynthesisGraph::has_arc(std::size_t from, std::size_t length) const {
    return from + length <= segment_count() &&
           std::binary_search(lengths_.begin(), lengths_.end(), length);
}

ArcInfo SynthesisGraph::arc(std::size_t from, std::size_t length) const {
    if (!has_arc(from, length))
        throw ValidationError("graph: no arc from node " + std::to_string(from) +
                              " of length " + std::to_string(length));
    const auto key = std::make_pair(from, length);
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    SyllableGroup group;
    group.segments.assign(segments_.begin() + static_cast<std::ptrdiff_t>(from),
                          segments_.begin() + static_cast<std::ptrdiff_t>(from + length));
    group.start_node = from;
    group.end_node = from + length;
    const auto match = best_pattern(group, *dict_);
    const ArcInfo info{match.distance, match.index};
    std::lock_guard lock(mutex_);
    const auto [it, inserted] = memo_.try_emplace(key, info);
    if (inserted) ++evaluations_;
    return it->second;
}

std::uint64_t SynthesisGraph::arcs_evaluated() const {
    std::lock_guard lock(mutex_);
    return evaluations_;
}

std::uint64_t count_compositions(std::size_t p, const std::vector<std::size_t>& lengths) {
    std::vector<std::size_t> parts(lengths);
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<std::uint64_t> count(p + 1, 0);
    count[0] = 1;
    for (std::size_t v = 1; v <= p; ++v)
        for (std::size_t n : parts)
            if (n >= 1 && n <= v) count[v] += count[v - n];
    return count[p];
}

namespace {

// Lexicographic enumeration; counts one expansion per visited non-goal node.
void enumerate_rec(std::size_t v, std::size_t p, const std::vector<std::size_t>& lengths,
                   std::vector<std::size_t>& prefix,
                   std::vector<std::vector<std::size_t>>& out,
                   std::uint64_t& expanded) {
    if (v == p) {
        out.push_back(prefix);
        return;
    }
    ++expanded;
    for (std::size_t n : lengths) {
        if (v + n > p) continue;
        prefix.push_back(v + n);
        enumerate_rec(v + n, p, lengths, prefix, out, expanded);
        prefix.pop_back();
    }
}

std::vector<std::vector<std::size_t>> enumerate_with_stats(
    std::size_t p, const std::vector<std::size_t>& lengths, std::uint64_t& expanded) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix{0};
    enumerate_rec(0, p, lengths, prefix, out, expanded);
    return out;
}

// Fills labels, weights and cost for a node sequence; the only place
// first-solution strategies touch arc weights.
SolutionPath finish_path(const SynthesisGraph& graph, std::vector<std::size_t> nodes,
                         std::uint64_t nodes_expanded, std::uint64_t evals_before) {
    SolutionPath path;
    path.nodes = std::move(nodes);
    for (std::size_t h = 0; h + 1 < path.nodes.size(); ++h) {
        const std::size_t from = path.nodes[h];
        const std::size_t len = path.nodes[h + 1] - from;
        const ArcInfo info = graph.arc(from, len);
        path.labels.push_back(graph.dictionary().at(info.pattern_index).label);
        path.pattern_indices.push_back(info.pattern_index);
        path.hop_weights.push_back(info.weight);
        path.cost += info.weight;
    }
    path.stats.nodes_expanded = nodes_expanded;
    path.stats.arcs_evaluated = graph.arcs_evaluated() - evals_before;
    return path;
}

bool dfs_rec(const SynthesisGraph& graph, std::size_t v,
             std::vector<std::size_t>& path, std::uint64_t& expanded) {
    const std::size_t p = graph.segment_count();
    if (v == p) return true;
    ++expanded;
    for (std::size_t n : graph.allowed_lengths()) {
        if (v + n > p) continue;
        path.push_back(v + n);
        if (dfs_rec(graph, v + n, path, expanded)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_compositions(
    std::size_t p, const std::vector<std::size_t>& lengths) {
    std::vector<std::size_t> parts(lengths);
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (!parts.empty() && parts.front() == 0) parts.erase(parts.begin());
    std::uint64_t expanded = 0;
    return enumerate_with_stats(p, parts, expanded);
}

std::vector<std::vector<std::size_t>> enumerate_paths(const SynthesisGraph& graph) {
    return enumerate_compositions(graph.segment_count(), graph.allowed_lengths());
}

SolutionPath search_full(const SynthesisGraph& graph) {
    const std::uint64_t evals_before = graph.arcs_evaluated();
    std::uint64_t expanded = 0;
    const auto paths =
        enumerate_with_stats(graph.segment_count(), graph.allowed_lengths(), expanded);
    if (paths.empty())
        throw NoPathError("no complete path: " + std::to_string(graph.segment_count()) +
                          " segments cannot be covered by the available syllable lengths");

    const std::vector<std::size_t>* best = nullptr;
    double best_cost = 0.0;
    for (const auto& nodes : paths) {
        double cost = 0.0;
        for (std::size_t h = 0; h + 1 < nodes.size(); ++h)
            cost += graph.arc(nodes[h], nodes[h + 1] - nodes[h]).weight;
        // Lexicographic enumeration order makes "strictly better" keep the
        // lexicographically first path among equal costs.
        if (best == nullptr || cost < best_cost) {
            best = &nodes;
            best_cost = cost;
        }
    }
    return finish_path(graph, *best, expanded, evals_before);
}

SolutionPath search_dfs(const SynthesisGraph& graph) {
    const std::uint64_t evals_before = graph.arcs_evaluated();
    std::vector<std::size_t> nodes{0};
    std::uint64_t expanded = 0;
    if (!dfs_rec(graph, 0, nodes, expanded))
        throw NoPathError("no complete path: " + std::to_string(graph.segment_count()) +
                          " segments cannot be covered by the available syllable lengths");
    return finish_path(graph, std::move(nodes), expanded, evals_before);
}

SolutionPath search_bfs(const SynthesisGraph& graph) {
    const std::uint64_t evals_before = graph.arcs_evaluated();
    const std::size_t p = graph.segment_count();

    struct Entry {
        std::size_t node;
        std::ptrdiff_t parent;
    };
    std::vector<Entry> arena;
    std::deque<std::size_t> queue;
    std::uint64_t expanded = 0;

    const auto expand = [&](std::size_t node, std::ptrdiff_t entry_index) {
        ++expanded;
        for (std::size_t n : graph.allowed_lengths()) {
            if (node + n > p) continue;
            arena.push_back(Entry{node + n, entry_index});
            queue.push_back(arena.size() - 1);
        }
    };

    if (p == 0) return finish_path(graph, {0}, 0, evals_before);
    expand(0, -1);

    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        const Entry e = arena[idx];
        if (e.node == p) {
            std::vector<std::size_t> nodes;
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(idx); i >= 0;
                 i = arena[static_cast<std::size_t>(i)].parent)
                nodes.push_back(arena[static_cast<std::size_t>(i)].node);
            nodes.push_back(0);
            std::reverse(nodes.begin(), nodes.end());
            return finish_path(graph, std::move(nodes), expanded, evals_before);
        }
        expand(e.node, static_cast<std::ptrdiff_t>(idx));
    }
    throw NoPathError("no complete path: " + std::to_string(p) +
                      " segments cannot be covered by the available syllable lengths");
}

SolutionPath run_search(const SynthesisGraph& graph, SearchStrategy strategy) {
    switch (strategy) {
        case SearchStrategy::full: return search_full(graph);
        case SearchStrategy::dfs: return search_dfs(graph);
        case SearchStrategy::bfs: return search_bfs(graph);
    }
    throw Error("unknown search strategy");
}

}  // namespace sylrec
