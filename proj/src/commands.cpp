#include "fce/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "fce/image_io.hpp"
#include "fce/image_ops.hpp"
#include "fce/synthetic.hpp"
#include "fce/trace_io.hpp"

namespace fce::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void apply_overrides(const HyperParamOverrides& o, HyperParams& hp) {
    if (o.change_prob) hp.change_prob = *o.change_prob;
    if (o.mutate_mu) hp.mutate_mu = *o.mutate_mu;
    if (o.mutate_sigma) hp.mutate_sigma = *o.mutate_sigma;
    if (o.membership_split_prob) hp.membership_split_prob = *o.membership_split_prob;
    if (o.pop_size) hp.pop_size = *o.pop_size;
    if (o.neighbors_per_gen) hp.neighbors_per_gen = *o.neighbors_per_gen;
    if (o.crossover_swap_prob) hp.crossover_swap_prob = *o.crossover_swap_prob;
    if (o.edge_threshold) hp.edge_threshold = *o.edge_threshold;
    if (o.entropy_source) hp.entropy_source = entropy_source_from_string(*o.entropy_source);
    if (o.seed) hp.seed = *o.seed;
    if (o.freeze_targets) hp.mutable_targets = false;
    if (o.serial) hp.parallel = false;
    if (o.max_generations) {
        hp.max_generations = *o.max_generations;
        if (!o.per_run_time) hp.time_budget_s.reset();
    }
    if (o.per_run_time) hp.time_budget_s = *o.per_run_time;
}

void apply_overrides(const HyperParamOverrides& o, ExperimentConfig& cfg) {
    HyperParamOverrides rest = o;
    rest.per_run_time.reset();
    apply_overrides(rest, cfg.hp);
    if (o.per_run_time) {
        cfg.per_run_time = *o.per_run_time;
        // An explicit time budget on the command line wins over a configured cap.
        if (!o.max_generations) cfg.hp.max_generations.reset();
    }
}

namespace {

ordered_json report_json(const FitnessReport& r) { return ordered_json::parse(to_json(r)); }

ordered_json delta_json(const FitnessReport& before, const FitnessReport& after) {
    const auto d = fitness_delta(before, after);
    return d ? ordered_json(*d) : ordered_json(nullptr);
}

fs::path sibling(const fs::path& output, const std::string& suffix) {
    fs::path p = output;
    p.replace_extension();
    return fs::path(p.string() + suffix);
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw IoError(path.string() + ": write failed");
}

}  // namespace

int cmd_enhance(const EnhanceArgs& args, std::ostream& out, std::ostream& err) {
    try {
        HyperParams hp;
        apply_overrides(args.hp, hp);
        hp.validate();

        const Image img = load_image(args.input);
        const FitnessReport original = evaluate_image(img, hp.fitness_options());
        const RunTrace trace = run_variant(img, args.variant, hp);
        const TransferLut lut = build_lut(trace.best);
        const Image enhanced = enhance(img, lut);

        const fs::path genome_out = args.genome_out.value_or(sibling(args.output, ".genome.json"));
        const fs::path lut_out = args.lut_out.value_or(sibling(args.output, ".lut.csv"));
        const fs::path trace_out = args.trace_out.value_or(sibling(args.output, ".trace.csv"));

        save_image(enhanced, args.output);
        write_genome_file(trace.best, genome_out);
        write_lut_file(lut, lut_out);
        write_trace_file(trace.records, trace_out, hp.time_budget_s.has_value());

        ordered_json summary = {
            {"command", "enhance"},
            {"input", args.input.generic_string()},
            {"variant", std::string(to_string(args.variant))},
            {"seed", hp.seed},
            {"generations", trace.generations()},
            {"improvement_rate",
             trace.generations() > 0 ? ordered_json(improvement_rate(trace)) : nullptr},
            {"lut_fallbacks", lut.fallback_count},
            {"original", report_json(original)},
            {"result", report_json(trace.best_report)},
            {"delta_F", delta_json(original, trace.best_report)},
            {"outputs",
             {{"image", args.output.generic_string()},
              {"genome", genome_out.generic_string()},
              {"lut", lut_out.generic_string()},
              {"trace", trace_out.generic_string()}}},
        };
        const std::string text = summary.dump(2) + "\n";
        if (args.report_out) write_text(*args.report_out, text);
        out << text;
        if (trace.best_report.degenerate) {
            err << "warning: final fitness is degenerate (edge energy <= e); image written anyway\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "enhance: " << e.what() << "\n";
        return 1;
    }
}

int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out, std::ostream& err) {
    try {
        ExperimentConfig cfg = load_experiment_config(args.config);
        apply_overrides(args.hp, cfg);
        if (args.num_of_test) cfg.num_of_test = *args.num_of_test;
        if (args.output_dir) cfg.output_dir = *args.output_dir;
        if (args.jobs) cfg.jobs = *args.jobs;

        const BenchmarkReport report = run_benchmark(cfg);
        out << report.to_table();
        out << "Report written to " << (cfg.output_dir / "report.json").generic_string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "benchmark: " << e.what() << "\n";
        return 1;
    }
}

int cmd_baseline(const BaselineArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const FitnessOptions opts{args.edge_threshold,
                                  entropy_source_from_string(args.entropy_source)};
        const Image img = load_image(args.input);
        const GrayImage plane = intensity_plane(img);
        const TransferLut lut{equalization_lut(plane), 0};
        const Image equalized = enhance(img, lut);

        const FitnessReport original = evaluate(plane, opts);
        const FitnessReport result = evaluate(apply_lut(plane, lut), opts);
        save_image(equalized, args.output);

        ordered_json summary = {
            {"command", "baseline"},
            {"method", "histogram-equalization"},
            {"input", args.input.generic_string()},
            {"original", report_json(original)},
            {"result", report_json(result)},
            {"delta_F", delta_json(original, result)},
            {"outputs", {{"image", args.output.generic_string()}}},
        };
        const std::string text = summary.dump(2) + "\n";
        if (args.report_out) write_text(*args.report_out, text);
        out << text;
        return 0;
    } catch (const std::exception& e) {
        err << "baseline: " << e.what() << "\n";
        return 1;
    }
}

int cmd_fitness(const FitnessArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const FitnessOptions opts{args.edge_threshold,
                                  entropy_source_from_string(args.entropy_source)};
        const Image img = load_image(args.input);
        const FitnessReport report = args.genome
                                         ? fitness_of_genome(img, read_genome_file(*args.genome), opts)
                                         : evaluate_image(img, opts);
        out << to_json(report) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "fitness: " << e.what() << "\n";
        return 1;
    }
}

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.low < 0 || args.high > 255 || args.low > args.high) {
            throw std::invalid_argument("intensity range must satisfy 0 <= low <= high <= 255");
        }
        const auto low = static_cast<std::uint8_t>(args.low);
        const auto high = static_cast<std::uint8_t>(args.high);
        const Image img =
            args.color ? Image(synthetic::low_contrast_color_scene(args.width, args.height,
                                                                   args.seed, low, high))
                       : Image(synthetic::low_contrast_scene(args.width, args.height, args.seed,
                                                             low, high));
        save_image(img, args.output);
        out << "wrote " << args.output.generic_string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "synth: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fce::cli
