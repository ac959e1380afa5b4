// fce: fuzzy contrast enhancement command-line interface.

#include <iostream>
#include <vector>
#include <string>

#include <CLI11.hpp>

#include "fce/commands.hpp"

namespace {

void add_hyperparam_flags(CLI::App* cmd, fce::cli::HyperParamOverrides& o) {
    cmd->add_option("--change-prob", o.change_prob, "Per-function mutation probability (0.5)");
    cmd->add_option("--mutate-mu", o.mutate_mu, "Mean step magnitude of a mutation (3)");
    cmd->add_option("--mutate-sigma", o.mutate_sigma, "Std-dev of a mutation step (2)");
    cmd->add_option("--membership-split-prob", o.membership_split_prob,
                    "Probability of a split instead of a shape change (0.1)");
    cmd->add_option("--pop-size", o.pop_size, "GA population size (30)");
    cmd->add_option("--neighbors-per-gen", o.neighbors_per_gen,
                    "Hill-climbing neighbours per generation (10)");
    cmd->add_option("--crossover-swap-prob", o.crossover_swap_prob,
                    "Uniform crossover swap probability (0.5)");
    cmd->add_option("--edge-threshold", o.edge_threshold,
                    "Sobel magnitude above which a pixel is an edge (20)");
    cmd->add_option("--entropy-source", o.entropy_source, "sobel | enhanced")
        ->check(CLI::IsMember({"sobel", "enhanced"}));
    cmd->add_option("--per-run-time", o.per_run_time, "Wall-clock budget per run, seconds (120)");
    cmd->add_option("--max-generations", o.max_generations,
                    "Generation cap; without --per-run-time the run is generation-capped");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_flag("--freeze-targets", o.freeze_targets,
                  "Keep defuzzification targets at their initial values");
    cmd->add_flag("--serial", o.serial, "Evaluate candidates on a single thread");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy contrast enhancement with evolved membership functions"};
    app.require_subcommand(1);

    std::vector<std::string> variant_names;
    for (const auto v : fce::kAllVariants) variant_names.emplace_back(fce::to_string(v));
    std::string variant_name = "HC-simple";

    fce::cli::EnhanceArgs enhance;
    auto* enhance_cmd = app.add_subcommand("enhance", "Evolve a transfer function for one image");
    enhance_cmd->add_option("input", enhance.input, "Input image (PNG, PGM, PPM)")->required();
    enhance_cmd->add_option("-o,--output", enhance.output, "Enhanced image path")->required();
    enhance_cmd->add_option("--variant", variant_name, "Optimizer variant (HC-simple)")
        ->check(CLI::IsMember(variant_names));
    enhance_cmd->add_option("--genome-out", enhance.genome_out, "Best genome JSON");
    enhance_cmd->add_option("--lut-out", enhance.lut_out, "Transfer LUT CSV");
    enhance_cmd->add_option("--trace-out", enhance.trace_out, "Run trace CSV");
    enhance_cmd->add_option("--report-out", enhance.report_out, "Summary JSON");
    add_hyperparam_flags(enhance_cmd, enhance.hp);

    fce::cli::BenchmarkArgs bench;
    auto* bench_cmd = app.add_subcommand("benchmark", "Run the variant-selection benchmark");
    bench_cmd->add_option("config", bench.config, "Experiment config (TOML key = value)")
        ->required();
    bench_cmd->add_option("--num-of-test", bench.num_of_test, "Runs per image and variant (5)");
    bench_cmd->add_option("--output-dir", bench.output_dir, "Where traces and reports go");
    bench_cmd->add_option("--jobs", bench.jobs, "Concurrent runs (1)");
    add_hyperparam_flags(bench_cmd, bench.hp);

    fce::cli::BaselineArgs baseline;
    auto* baseline_cmd = app.add_subcommand("baseline", "Histogram-equalize an image for comparison");
    baseline_cmd->add_option("input", baseline.input, "Input image")->required();
    baseline_cmd->add_option("-o,--output", baseline.output, "Equalized image path")->required();
    baseline_cmd->add_option("--edge-threshold", baseline.edge_threshold, "Edge threshold (20)");
    baseline_cmd->add_option("--entropy-source", baseline.entropy_source, "sobel | enhanced")
        ->check(CLI::IsMember({"sobel", "enhanced"}));
    baseline_cmd->add_option("--report-out", baseline.report_out, "Summary JSON");

    fce::cli::FitnessArgs fitness;
    auto* fitness_cmd = app.add_subcommand("fitness", "Print the fitness report of an image");
    fitness_cmd->add_option("input", fitness.input, "Input image")->required();
    fitness_cmd->add_option("--genome", fitness.genome, "Evaluate after applying this genome");
    fitness_cmd->add_option("--edge-threshold", fitness.edge_threshold, "Edge threshold (20)");
    fitness_cmd->add_option("--entropy-source", fitness.entropy_source, "sobel | enhanced")
        ->check(CLI::IsMember({"sobel", "enhanced"}));

    fce::cli::SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic low-contrast test image");
    synth_cmd->add_option("-o,--output", synth.output, "Output image")->required();
    synth_cmd->add_option("--width", synth.width, "Width (128)");
    synth_cmd->add_option("--height", synth.height, "Height (128)");
    synth_cmd->add_option("--low", synth.low, "Lowest intensity (100)");
    synth_cmd->add_option("--high", synth.high, "Highest intensity (156)");
    synth_cmd->add_option("--seed", synth.seed, "Scene seed (1)");
    synth_cmd->add_flag("--color", synth.color, "Write an RGB image");

    CLI11_PARSE(app, argc, argv);

    if (*enhance_cmd) {
        enhance.variant = fce::variant_from_string(variant_name);
        return fce::cli::cmd_enhance(enhance, std::cout, std::cerr);
    }
    if (*bench_cmd) return fce::cli::cmd_benchmark(bench, std::cout, std::cerr);
    if (*baseline_cmd) return fce::cli::cmd_baseline(baseline, std::cout, std::cerr);
    if (*fitness_cmd) return fce::cli::cmd_fitness(fitness, std::cout, std::cerr);
    if (*synth_cmd) return fce::cli::cmd_synth(synth, std::cout, std::cerr);
    return 1;
}
