#include "sylrec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sylrec::io {

using nlohmann::json;

namespace {

json frames_to_json(const Trajectory& traj) {
    json frames = json::array();
    for (std::size_t i = 0; i < traj.frame_count(); ++i) {
        json frame = json::array();
        for (double v : traj.frame(i)) frame.push_back(v);
        frames.push_back(std::move(frame));
    }
    return frames;
}

std::vector<std::vector<double>> frames_from_json(const json& j) {
    std::vector<std::vector<double>> frames;
    for (const auto& f : j) frames.push_back(f.get<std::vector<double>>());
    return frames;
}

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed ") + what + ": " + e.what());
    }
}

Trajectory trajectory_from_json(const json& j, std::size_t declared_dim,
                                const std::string& context) {
    Trajectory traj = validate_trajectory(frames_from_json(j));
    if (traj.dim() != declared_dim)
        throw ValidationError(context + ": frame dimension " + std::to_string(traj.dim()) +
                              " does not match declared parameter_dim " +
                              std::to_string(declared_dim));
    return traj;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string serialize_dictionary(const Dictionary& dict) {
    json doc;
    doc["parameter_dim"] = dict.parameter_dim();
    json syllables = json::array();
    for (const auto& s : dict.syllables()) {
        json entry;
        entry["label"] = s.label;
        entry["phonemes"] = s.phonemes;
        entry["frames"] = frames_to_json(s.trajectory);
        entry["boundaries"] = s.boundaries.starts();
        syllables.push_back(std::move(entry));
    }
    doc["syllables"] = std::move(syllables);
    return doc.dump(2) + "\n";
}

Dictionary parse_dictionary(const std::string& text) {
    const json doc = parse_text(text, "dictionary document");
    try {
        const auto dim = doc.at("parameter_dim").get<std::size_t>();
        std::vector<SyllablePattern> patterns;
        for (const auto& entry : doc.at("syllables")) {
            const auto label = entry.at("label").get<std::string>();
            try {
                patterns.push_back(SyllablePattern::make(
                    label, entry.at("phonemes").get<std::vector<std::string>>(),
                    trajectory_from_json(entry.at("frames"), dim, "syllable '" + label + "'"),
                    entry.at("boundaries").get<std::vector<std::size_t>>()));
            } catch (const ValidationError& e) {
                throw ValidationError("syllable '" + label + "': " + e.what());
            }
        }
        return Dictionary(std::move(patterns));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed dictionary document: ") + e.what());
    }
}

std::string serialize_input(const SegmentedInput& input) {
    json doc;
    doc["parameter_dim"] = input.trajectory.dim();
    doc["frames"] = frames_to_json(input.trajectory);
    doc["boundaries"] = input.boundaries.starts();
    return doc.dump(2) + "\n";
}

SegmentedInput parse_input(const std::string& text) {
    const json doc = parse_text(text, "input document");
    try {
        const auto dim = doc.at("parameter_dim").get<std::size_t>();
        return SegmentedInput::make(
            trajectory_from_json(doc.at("frames"), dim, "input"),
            doc.at("boundaries").get<std::vector<std::size_t>>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed input document: ") + e.what());
    }
}

Dictionary load_dictionary(const std::filesystem::path& path) {
    return parse_dictionary(read_text_file(path));
}

void save_dictionary(const std::filesystem::path& path, const Dictionary& dict) {
    write_text_file(path, serialize_dictionary(dict));
}

SegmentedInput load_input(const std::filesystem::path& path) {
    return parse_input(read_text_file(path));
}

void save_input(const std::filesystem::path& path, const SegmentedInput& input) {
    write_text_file(path, serialize_input(input));
}

namespace {

json coeffs_to_json(const StitchResult& result) {
    json c;
    if (const auto* lin = std::get_if<LinearCoeffs>(&result.coeffs)) {
        c["a"] = lin->a;
        c["b"] = lin->b;
    } else {
        const auto& quad = std::get<QuadraticCoeffs>(result.coeffs);
        c["a"] = quad.a;
        c["b"] = quad.b;
        c["c"] = quad.c;
    }
    return c;
}

json stitch_to_json(const StitchResult& result) {
    json s;
    s["model"] = to_string(result.model);
    s["coefficients"] = coeffs_to_json(result);
    s["sigma2"] = result.sigma2;
    s["junction_residuals"] = result.junction_residuals;
    s["identity_fallback"] = result.identity_fallback;
    return s;
}

}  // namespace

std::string recognition_report_json(const RecognitionResult& result) {
    json doc;
    doc["labels"] = result.labels;
    doc["per_syllable_distances"] = result.per_syllable_distances;
    doc["total_distance"] = result.total_distance;
    doc["strategy"] = to_string(result.strategy);
    doc["model"] = to_string(result.model);
    doc["sigma2"] = result.stitched.sigma2;
    doc["junction_residuals"] = result.stitched.junction_residuals;
    doc["identity_fallback"] = result.stitched.identity_fallback;
    doc["coefficients"] = coeffs_to_json(result.stitched);
    doc["stats"] = {{"arcs_evaluated", result.stats.arcs_evaluated},
                    {"nodes_expanded", result.stats.nodes_expanded}};
    doc["info_distance"] = result.info_distance;
    return doc.dump(2) + "\n";
}

std::string stitch_report_json(const StitchResult& result,
                               const std::vector<std::string>& labels) {
    json doc = stitch_to_json(result);
    doc["labels"] = labels;
    doc["frame_count"] = result.stitched.frame_count();
    return doc.dump(2) + "\n";
}

std::string experiment_report_json(const ExperimentReport& report,
                                   const SynthConfig& cfg) {
    json doc;
    doc["config"] = {{"seed", cfg.seed},
                     {"syllable_count", cfg.syllable_count},
                     {"parameter_dim", cfg.parameter_dim},
                     {"allowed_lengths", cfg.allowed_lengths},
                     {"frames_per_segment_min", cfg.frames_per_segment_min},
                     {"frames_per_segment_max", cfg.frames_per_segment_max},
                     {"noise_sigma", cfg.noise_sigma}};
    doc["instances"] = report.instance_count;
    json strategies;
    for (const auto& [name, s] : report.per_strategy) {
        strategies[name] = {{"mean_cost", s.mean_cost},
                            {"median_cost", s.median_cost},
                            {"mean_arcs_evaluated", s.mean_arcs_evaluated},
                            {"mean_nodes_expanded", s.mean_nodes_expanded},
                            {"label_accuracy", s.label_accuracy}};
    }
    doc["per_strategy"] = std::move(strategies);
    json models;
    for (const auto& [name, m] : report.per_model) {
        models[name] = {{"mean_sigma2", m.mean_sigma2},
                        {"mean_junction_residual", m.mean_junction_residual},
                        {"mean_info_distance", m.mean_info_distance}};
    }
    doc["per_model"] = std::move(models);
    return doc.dump(2) + "\n";
}

std::string enumeration_json(std::size_t segments,
                             const std::vector<std::size_t>& lengths,
                             const std::vector<std::vector<std::size_t>>& paths) {
    json doc;
    doc["segments"] = segments;
    doc["lengths"] = lengths;
    doc["count"] = paths.size();
    doc["paths"] = paths;
    return doc.dump(2) + "\n";
}

std::string truth_labels_json(const std::vector<std::string>& labels) {
    json doc;
    doc["labels"] = labels;
    return doc.dump(2) + "\n";
}

std::string stitched_csv(const Trajectory& traj) {
    std::string out;
    for (std::size_t i = 0; i < traj.frame_count(); ++i) {
        const auto f = traj.frame(i);
        for (std::size_t c = 0; c < f.size(); ++c) {
            if (c > 0) out += ',';
            out += format_double(f[c]);
        }
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path.string());
    out << text;
    if (!out) throw ValidationError("write failed: " + path.string());
}

}  // namespace sylrec::io
