#include "cli_app.hpp"

#include <filesystem>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "sylrec/harness.hpp"
#include "sylrec/io.hpp"
#include "sylrec/recognizer.hpp"
#include "sylrec/search.hpp"

namespace sylrec::cli {

namespace {

struct CommonOpts {
    std::string dict_path;
    std::string input_path;
    std::string out_path;
    std::string stitched_out;
    std::string strategy = "full";
    std::string model = "linear";
};

SearchStrategy parse_strategy(const std::string& name) {
    const auto s = strategy_from_string(name);
    if (!s) throw ValidationError("unknown strategy '" + name + "'");
    return *s;
}

StitchModel parse_model(const std::string& name) {
    if (name == "linear") return StitchModel::linear;
    if (name == "quadratic") return StitchModel::quadratic;
    throw ValidationError("unknown model '" + name + "'");
}

std::string path_line(const std::vector<std::size_t>& nodes) {
    std::string line;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) line += '-';
        line += std::to_string(nodes[i]);
    }
    line += " (";
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (i > 0) line += '-';
        line += std::to_string(nodes[i + 1] - nodes[i]);
    }
    line += ')';
    return line;
}

void print_stitch_summary(std::ostream& out, const StitchResult& st) {
    out << "model: " << to_string(st.model) << "\n";
    out << "sigma2 per channel:";
    for (double s : st.sigma2) out << ' ' << s;
    out << "\n";
    out << "max junction residual: " << st.max_junction_residual() << "\n";
    if (st.any_fallback()) {
        out << "identity fallback channels:";
        for (std::size_t c = 0; c < st.identity_fallback.size(); ++c)
            if (st.identity_fallback[c]) out << ' ' << c;
        out << "\n";
    }
}

void write_outputs(const std::string& out_path, const std::string& json,
                   const std::string& stitched_out, const Trajectory* stitched) {
    if (!out_path.empty()) io::write_text_file(out_path, json);
    if (!stitched_out.empty() && stitched != nullptr)
        io::write_text_file(stitched_out, io::stitched_csv(*stitched));
}

int cmd_gen_dict(const SynthConfig& cfg, const std::string& out_path, std::ostream& out) {
    const Dictionary dict = gen_synthetic_dictionary(cfg);
    io::save_dictionary(out_path, dict);
    out << "wrote dictionary with " << dict.size() << " syllables (dim "
        << dict.parameter_dim() << ") to " << out_path << "\n";
    return 0;
}

int cmd_gen_input(const std::string& dict_path, std::uint64_t seed, std::size_t count,
                  double noise, const std::string& out_path,
                  const std::string& truth_path, std::ostream& out) {
    const Dictionary dict = io::load_dictionary(dict_path);
    const GeneratedInput gi = gen_input(dict, seed, count, noise);
    io::save_input(out_path, gi.input);
    if (!truth_path.empty())
        io::write_text_file(truth_path, io::truth_labels_json(gi.truth_labels));
    out << "wrote input with " << gi.input.segment_count() << " segments to "
        << out_path << "\n";
    out << "truth labels:";
    for (const auto& l : gi.truth_labels) out << ' ' << l;
    out << "\n";
    return 0;
}

int cmd_recognize(const CommonOpts& opts, std::ostream& out) {
    const Dictionary dict = io::load_dictionary(opts.dict_path);
    const SegmentedInput input = io::load_input(opts.input_path);
    const RecognitionResult r = recognize(input, dict, parse_strategy(opts.strategy),
                                          parse_model(opts.model));
    write_outputs(opts.out_path, io::recognition_report_json(r), opts.stitched_out,
                  &r.stitched.stitched);
    out << "labels:";
    for (const auto& l : r.labels) out << ' ' << l;
    out << "\n";
    out << "total distance: " << r.total_distance << "\n";
    out << "strategy: " << to_string(r.strategy) << "\n";
    print_stitch_summary(out, r.stitched);
    out << "arcs evaluated: " << r.stats.arcs_evaluated
        << ", nodes expanded: " << r.stats.nodes_expanded << "\n";
    out << "wall time: " << r.wall_time_seconds * 1e3 << " ms\n";
    out << "DTW(input, stitched): " << r.info_distance << "\n";
    return 0;
}

int cmd_stitch(const CommonOpts& opts, const std::vector<std::string>& labels,
               std::ostream& out) {
    const Dictionary dict = io::load_dictionary(opts.dict_path);
    std::vector<Trajectory> syllables;
    for (const auto& label : labels) {
        const SyllablePattern* p = dict.find(label);
        if (p == nullptr)
            throw ValidationError("label '" + label + "' not in dictionary");
        syllables.push_back(p->trajectory);
    }
    const StitchResult st = stitch(syllables, parse_model(opts.model));
    write_outputs(opts.out_path, io::stitch_report_json(st, labels), opts.stitched_out,
                  &st.stitched);
    out << "stitched " << labels.size() << " syllables into "
        << st.stitched.frame_count() << " frames\n";
    print_stitch_summary(out, st);
    return 0;
}

int cmd_compare(const SynthConfig& cfg, std::size_t instances,
                const std::string& out_path, std::ostream& out) {
    const ExperimentReport report = compare_strategies(cfg, instances);
    if (!out_path.empty())
        io::write_text_file(out_path, io::experiment_report_json(report, cfg));
    out << "instances: " << report.instance_count << "\n";
    for (const auto& [name, s] : report.per_strategy) {
        out << name << ": mean cost " << s.mean_cost << ", median cost " << s.median_cost
            << ", mean arcs " << s.mean_arcs_evaluated << ", mean nodes "
            << s.mean_nodes_expanded << ", mean wall "
            << s.mean_wall_time_seconds * 1e3 << " ms, accuracy " << s.label_accuracy
            << "\n";
    }
    for (const auto& [name, m] : report.per_model) {
        out << name << ": mean sigma2 " << m.mean_sigma2 << ", mean junction residual "
            << m.mean_junction_residual << ", mean DTW(input, stitched) "
            << m.mean_info_distance << "\n";
    }
    return 0;
}

int cmd_enumerate(std::size_t segments, const std::vector<std::size_t>& lengths,
                  const std::string& out_path, std::ostream& out) {
    if (lengths.empty()) throw ValidationError("enumerate: no lengths given");
    const auto paths = enumerate_compositions(segments, lengths);
    if (!out_path.empty())
        io::write_text_file(out_path, io::enumeration_json(segments, lengths, paths));
    for (const auto& p : paths) out << path_line(p) << "\n";
    out << "count: " << paths.size() << "\n";
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Syllable-sequence recognition over segmented parameter "
                 "trajectories, with smooth reference synthesis"};
    app.name("sylrec");
    app.require_subcommand(1);

    CommonOpts opts;
    SynthConfig cfg;
    std::uint64_t seed = 1;
    std::size_t count = 3;
    std::size_t instances = 20;
    std::size_t segments = 0;
    double noise = 0.0;
    std::vector<std::size_t> lengths{2, 3, 4};
    std::vector<std::string> labels;
    std::string truth_out;

    const auto is_strategy = CLI::IsMember({"full", "dfs", "bfs"});
    const auto is_model = CLI::IsMember({"linear", "quadratic"});

    auto* gen_dict = app.add_subcommand("gen-dict", "Generate a synthetic dictionary");
    gen_dict->add_option("--seed", cfg.seed, "Generator seed");
    gen_dict->add_option("--syllables", cfg.syllable_count, "Dictionary size");
    gen_dict->add_option("--dim", cfg.parameter_dim, "Channels per frame");
    gen_dict->add_option("--lengths", cfg.allowed_lengths, "Allowed segment counts")
        ->delimiter(',');
    gen_dict->add_option("--frames-min", cfg.frames_per_segment_min,
                         "Min frames per segment");
    gen_dict->add_option("--frames-max", cfg.frames_per_segment_max,
                         "Max frames per segment");
    gen_dict->add_option("--out", opts.out_path, "Dictionary file to write")->required();

    auto* gen_in = app.add_subcommand("gen-input", "Generate a synthetic input");
    gen_in->add_option("--dict", opts.dict_path, "Dictionary file")->required();
    gen_in->add_option("--seed", seed, "Generator seed");
    gen_in->add_option("--count", count, "Syllables to concatenate");
    gen_in->add_option("--noise", noise, "Gaussian noise sigma");
    gen_in->add_option("--out", opts.out_path, "Input file to write")->required();
    gen_in->add_option("--truth-out", truth_out, "Ground-truth labels file");

    auto* rec = app.add_subcommand("recognize", "Recognize a segmented input");
    rec->add_option("--dict", opts.dict_path, "Dictionary file")->required();
    rec->add_option("--input", opts.input_path, "Input file")->required();
    rec->add_option("--strategy", opts.strategy, "Search strategy")->check(is_strategy);
    rec->add_option("--model", opts.model, "Adjustment model")->check(is_model);
    rec->add_option("--out", opts.out_path, "Report JSON to write");
    rec->add_option("--stitched-out", opts.stitched_out, "Stitched trajectory CSV");

    auto* st = app.add_subcommand("stitch", "Stitch dictionary syllables by label");
    st->add_option("--dict", opts.dict_path, "Dictionary file")->required();
    st->add_option("--labels", labels, "Syllable labels, in order")
        ->required()
        ->delimiter(',');
    st->add_option("--model", opts.model, "Adjustment model")->check(is_model);
    st->add_option("--out", opts.out_path, "Report JSON to write");
    st->add_option("--stitched-out", opts.stitched_out, "Stitched trajectory CSV");

    auto* cmp = app.add_subcommand("compare", "Benchmark strategies on seeded data");
    cmp->add_option("--seed", cfg.seed, "Generator seed");
    cmp->add_option("--instances", instances, "Instance count");
    cmp->add_option("--noise", cfg.noise_sigma, "Gaussian noise sigma");
    cmp->add_option("--syllables", cfg.syllable_count, "Dictionary size");
    cmp->add_option("--dim", cfg.parameter_dim, "Channels per frame");
    cmp->add_option("--lengths", cfg.allowed_lengths, "Allowed segment counts")
        ->delimiter(',');
    cmp->add_option("--out", opts.out_path, "Report JSON to write");

    auto* en = app.add_subcommand("enumerate", "List complete paths for a segment count");
    en->add_option("--segments", segments, "Input segment count")->required();
    en->add_option("--lengths", lengths, "Allowed segment counts")->delimiter(',');
    en->add_option("--out", opts.out_path, "Path listing JSON to write");

    std::vector<const char*> argv;
    argv.push_back("sylrec");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_dict->parsed()) return cmd_gen_dict(cfg, opts.out_path, out);
        if (gen_in->parsed())
            return cmd_gen_input(opts.dict_path, seed, count, noise, opts.out_path,
                                 truth_out, out);
        if (rec->parsed()) return cmd_recognize(opts, out);
        if (st->parsed()) return cmd_stitch(opts, labels, out);
        if (cmp->parsed()) return cmd_compare(cfg, instances, opts.out_path, out);
        if (en->parsed()) return cmd_enumerate(segments, lengths, opts.out_path, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const NoPathError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sylrec::cli
