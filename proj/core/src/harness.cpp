#include "sylrec/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "sylrec/recognizer.hpp"
#include "sylrec/rng.hpp"

namespace sylrec {

namespace {

std::string pattern_label(std::size_t k) {
    std::string digits = std::to_string(k);
    while (digits.size() < 3) digits.insert(digits.begin(), '0');
    return "syl_" + digits;
}

double mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[mid];
    return 0.5 * (xs[mid - 1] + xs[mid]);
}

double label_accuracy(const std::vector<std::string>& truth,
                      const std::vector<std::string>& got) {
    const std::size_t longest = std::max(truth.size(), got.size());
    if (longest == 0) return 1.0;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < std::min(truth.size(), got.size()); ++i)
        if (truth[i] == got[i]) ++matches;
    return static_cast<double>(matches) / static_cast<double>(longest);
}

}  // namespace

Dictionary gen_synthetic_dictionary(const SynthConfig& cfg) {
    if (cfg.syllable_count == 0) throw ValidationError("synth: syllable_count must be >= 1");
    if (cfg.parameter_dim == 0) throw ValidationError("synth: parameter_dim must be >= 1");
    if (cfg.allowed_lengths.empty()) throw ValidationError("synth: no allowed lengths");
    for (std::size_t n : cfg.allowed_lengths)
        if (n == 0) throw ValidationError("synth: segment counts must be >= 1");
    if (cfg.frames_per_segment_min == 0 ||
        cfg.frames_per_segment_max < cfg.frames_per_segment_min)
        throw ValidationError("synth: bad frames-per-segment range");

    SeededRng rng(cfg.seed);
    std::vector<SyllablePattern> patterns;
    patterns.reserve(cfg.syllable_count);
    for (std::size_t k = 0; k < cfg.syllable_count; ++k) {
        const std::size_t n_k = cfg.allowed_lengths[rng.below(cfg.allowed_lengths.size())];
        std::vector<std::string> phonemes;
        std::vector<std::size_t> starts;
        std::vector<double> values;
        std::size_t offset = 0;
        for (std::size_t j = 0; j < n_k; ++j) {
            phonemes.push_back("ph_" + std::to_string(j));
            starts.push_back(offset);
            const std::size_t span =
                cfg.frames_per_segment_max - cfg.frames_per_segment_min + 1;
            const std::size_t frames =
                cfg.frames_per_segment_min + rng.below(span);
            // One cubic per channel per segment.
            std::vector<std::array<double, 4>> coeffs(cfg.parameter_dim);
            for (auto& c : coeffs)
                for (double& v : c) v = rng.uniform(-1.0, 1.0);
            for (std::size_t i = 0; i < frames; ++i) {
                const double t =
                    frames > 1 ? static_cast<double>(i) / static_cast<double>(frames - 1)
                               : 0.0;
                for (const auto& c : coeffs)
                    values.push_back(c[0] + t * (c[1] + t * (c[2] + t * c[3])));
            }
            offset += frames;
        }
        patterns.push_back(SyllablePattern::make(
            pattern_label(k), std::move(phonemes),
            Trajectory(std::move(values), cfg.parameter_dim), std::move(starts)));
    }
    return Dictionary(std::move(patterns));
}

GeneratedInput gen_input(const Dictionary& dict, std::uint64_t seed,
                         std::size_t syllable_count, double noise_sigma) {
    if (syllable_count == 0) throw ValidationError("synth: input syllable count must be >= 1");
    SeededRng rng(seed);
    std::vector<double> values;
    std::vector<std::size_t> starts;
    std::vector<std::string> truth;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < syllable_count; ++i) {
        const auto& pattern = dict.at(rng.below(dict.size()));
        truth.push_back(pattern.label);
        for (std::size_t s : pattern.boundaries.starts()) starts.push_back(offset + s);
        const auto& v = pattern.trajectory.values();
        values.insert(values.end(), v.begin(), v.end());
        offset += pattern.trajectory.frame_count();
    }
    if (noise_sigma != 0.0)
        for (double& v : values) v += noise_sigma * rng.gaussian();
    return GeneratedInput{
        SegmentedInput::make(Trajectory(std::move(values), dict.parameter_dim()),
                             std::move(starts)),
        std::move(truth)};
}

double oracle_shortest_path(const SynthesisGraph& graph) {
    const std::size_t p = graph.segment_count();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best(p + 1, inf);
    best[0] = 0.0;
    for (std::size_t v = 1; v <= p; ++v) {
        for (std::size_t n : graph.allowed_lengths()) {
            if (n > v || best[v - n] == inf) continue;
            const double cand = best[v - n] + graph.arc(v - n, n).weight;
            if (cand < best[v]) best[v] = cand;
        }
    }
    if (best[p] == inf)
        throw NoPathError("no complete path: " + std::to_string(p) +
                          " segments cannot be covered by the available syllable lengths");
    return best[p];
}

ExperimentReport compare_strategies(const SynthConfig& cfg, std::size_t instance_count) {
    if (instance_count == 0) throw ValidationError("compare: instance_count must be >= 1");
    const Dictionary dict = gen_synthetic_dictionary(cfg);

    constexpr SearchStrategy strategies[] = {SearchStrategy::full, SearchStrategy::dfs,
                                             SearchStrategy::bfs};
    constexpr StitchModel models[] = {StitchModel::linear, StitchModel::quadratic};

    std::map<std::string, std::vector<double>> costs, arcs, nodes, walls, accs;
    std::map<std::string, std::vector<double>> sigmas, residuals, infos;

    for (std::size_t i = 0; i < instance_count; ++i) {
        // Instance stream: syllable count in 2..4, then the input seed.
        SeededRng inst(derive_seed(cfg.seed, i));
        const std::size_t count = 2 + inst.below(3);
        const GeneratedInput gi = gen_input(dict, inst.next(), count, cfg.noise_sigma);

        // Independent optimality check on a shared-memo graph.
        SynthesisGraph graph(gi.input, dict);
        const SolutionPath full = search_full(graph);
        const double oracle = oracle_shortest_path(graph);
        if (full.cost != oracle)
            throw Error("compare: full-search cost " + std::to_string(full.cost) +
                        " differs from oracle " + std::to_string(oracle));
        const std::uint64_t complete_paths =
            count_compositions(gi.input.segment_count(), graph.allowed_lengths());

        for (const auto strategy : strategies) {
            const auto key = std::string(to_string(strategy));
            const RecognitionResult r = recognize(gi.input, dict, strategy,
                                                  StitchModel::linear);
            if (r.total_distance < full.cost)
                throw Error("compare: " + key + " undercut the exhaustive optimum");
            if (complete_paths >= 2 && strategy != SearchStrategy::full &&
                r.stats.arcs_evaluated >= full.stats.arcs_evaluated)
                throw Error("compare: " + key + " evaluated " +
                            std::to_string(r.stats.arcs_evaluated) +
                            " arcs, full search " +
                            std::to_string(full.stats.arcs_evaluated));
            costs[key].push_back(r.total_distance);
            arcs[key].push_back(static_cast<double>(r.stats.arcs_evaluated));
            nodes[key].push_back(static_cast<double>(r.stats.nodes_expanded));
            walls[key].push_back(r.wall_time_seconds);
            accs[key].push_back(label_accuracy(gi.truth_labels, r.labels));
        }

        for (const auto model : models) {
            const auto key = std::string(to_string(model));
            const RecognitionResult r = recognize(gi.input, dict, SearchStrategy::full,
                                                  model);
            sigmas[key].push_back(mean(r.stitched.sigma2));
            std::vector<double> flat;
            for (const auto& per_channel : r.stitched.junction_residuals)
                flat.insert(flat.end(), per_channel.begin(), per_channel.end());
            residuals[key].push_back(mean(flat));
            infos[key].push_back(r.info_distance);
        }
    }

    ExperimentReport report;
    report.instance_count = instance_count;
    for (const auto strategy : strategies) {
        const auto key = std::string(to_string(strategy));
        StrategySummary s;
        s.mean_cost = mean(costs[key]);
        s.median_cost = median(costs[key]);
        s.mean_arcs_evaluated = mean(arcs[key]);
        s.mean_nodes_expanded = mean(nodes[key]);
        s.mean_wall_time_seconds = mean(walls[key]);
        s.label_accuracy = mean(accs[key]);
        report.per_strategy[key] = s;
    }
    for (const auto model : models) {
        const auto key = std::string(to_string(model));
        ModelSummary m;
        m.mean_sigma2 = mean(sigmas[key]);
        m.mean_junction_residual = mean(residuals[key]);
        m.mean_info_distance = mean(infos[key]);
        report.per_model[key] = m;
    }
    return report;
}

}  // namespace sylrec
