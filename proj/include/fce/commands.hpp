#pragma once

// Subcommand implementations behind the `fce` executable. Each returns the
// process exit status and reports errors on `err` instead of throwing.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fce/experiment.hpp"
#include "fce/optimizers.hpp"

namespace fce::cli {

/// Hyperparameter flags; only the ones given on the command line are set.
struct HyperParamOverrides {
    std::optional<double> change_prob;
    std::optional<double> mutate_mu;
    std::optional<double> mutate_sigma;
    std::optional<double> membership_split_prob;
    std::optional<int> pop_size;
    std::optional<int> neighbors_per_gen;
    std::optional<double> crossover_swap_prob;
    std::optional<double> edge_threshold;
    std::optional<std::string> entropy_source;
    std::optional<double> per_run_time;
    std::optional<int> max_generations;
    std::optional<std::uint64_t> seed;
    bool freeze_targets = false;
    bool serial = false;
};

/// Applies the overrides. A generation cap given without an explicit time
/// budget switches the run to generation-capped mode.
void apply_overrides(const HyperParamOverrides& o, HyperParams& hp);
void apply_overrides(const HyperParamOverrides& o, ExperimentConfig& cfg);

struct EnhanceArgs {
    std::filesystem::path input;
    VariantId variant = VariantId::hc_simple;
    HyperParamOverrides hp;
    std::filesystem::path output;
    /// Defaults derive from `output`: <stem>.genome.json, .lut.csv, .trace.csv.
    std::optional<std::filesystem::path> genome_out;
    std::optional<std::filesystem::path> lut_out;
    std::optional<std::filesystem::path> trace_out;
    std::optional<std::filesystem::path> report_out;
};

struct BenchmarkArgs {
    std::filesystem::path config;
    HyperParamOverrides hp;
    std::optional<int> num_of_test;
    std::optional<std::filesystem::path> output_dir;
    std::optional<int> jobs;
};

struct BaselineArgs {
    std::filesystem::path input;
    std::filesystem::path output;
    double edge_threshold = 20.0;
    std::string entropy_source = "sobel";
    std::optional<std::filesystem::path> report_out;
};

struct FitnessArgs {
    std::filesystem::path input;
    std::optional<std::filesystem::path> genome;
    double edge_threshold = 20.0;
    std::string entropy_source = "sobel";
};

struct SynthArgs {
    std::filesystem::path output;
    int width = 128;
    int height = 128;
    int low = 100;
    int high = 156;
    std::uint64_t seed = 1;
    bool color = false;
};

int cmd_enhance(const EnhanceArgs& args, std::ostream& out, std::ostream& err);
int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out, std::ostream& err);
int cmd_baseline(const BaselineArgs& args, std::ostream& out, std::ostream& err);
int cmd_fitness(const FitnessArgs& args, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);

}  // namespace fce::cli
