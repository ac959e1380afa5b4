#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fce/fitness.hpp"
#include "fce/optimizers.hpp"

namespace fce {

/// One benchmark matrix: every image x variant, repeated num_of_test times.
struct ExperimentConfig {
    std::vector<std::filesystem::path> images;
    std::vector<VariantId> variants;
    int num_of_test = 5;
    double per_run_time = 120.0;
    /// Optimizer settings. When max_generations is set the runs are
    /// generation-capped and the wall-clock budget is not applied.
    HyperParams hp;
    std::filesystem::path output_dir = "benchmark_out";
    /// Number of (image, variant, run) cells executed concurrently.
    int jobs = 1;

    /// Throws std::invalid_argument; an empty variant list reports "nothing to benchmark".
    void validate() const;

    /// The settings each run actually uses (budget mode resolved).
    HyperParams run_params(std::uint64_t seed) const;
};

/// Parses a flat `key = value` document (TOML syntax). Relative paths are
/// resolved against `base_dir`. Keys mirror the CLI flag names with
/// underscores, e.g. `num_of_test`, `change_prob`, `max_generations`.
ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Seed for one cell, derived from the master seed and the cell's identity.
std::uint64_t run_seed(std::uint64_t master, const std::filesystem::path& image, VariantId variant,
                       int run);

struct RunResult {
    int run = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    std::filesystem::path trace_file;
    std::filesystem::path genome_file;
    double improvement_rate = 0.0;
    double final_F = 0.0;
    int generations = 0;
};

struct CellResult {
    std::size_t image_index = 0;
    VariantId variant = VariantId::hc_simple;
    std::vector<RunResult> runs;
    /// Means over the successful runs; nullopt when none succeeded.
    std::optional<double> mean_improvement_rate;
    std::optional<double> mean_final_F;
    std::optional<double> mean_generations;
};

struct ImageSummary {
    std::filesystem::path path;
    int width = 0;
    int height = 0;
    bool ok = false;
    std::string error;
    FitnessReport original;
    FitnessReport equalized;
};

struct RankingEntry {
    VariantId variant = VariantId::hc_simple;
    std::optional<double> mean_improvement_rate;
    int successful_runs = 0;
};

struct BenchmarkReport {
    ExperimentConfig config;
    std::vector<ImageSummary> images;
    std::vector<CellResult> cells;
    /// Descending by mean improvement rate; variants without a successful run last.
    std::vector<RankingEntry> ranking;
    /// The best hill-climbing variant and the best GA variant, in rank order.
    /// Falls back to the top two overall when only one family was run.
    std::vector<VariantId> selected;

    std::string to_json() const;
    std::string to_table() const;
};

/// Runs the whole matrix, writing per-run traces and genomes under
/// config.output_dir/{traces,genomes} plus report.json and report.txt.
/// Individual run failures are recorded and the batch continues.
BenchmarkReport run_benchmark(const ExperimentConfig& config);

/// Ranking and selection from finished cells.
std::vector<RankingEntry> rank_variants(const std::vector<VariantId>& variants,
                                        const std::vector<CellResult>& cells);
std::vector<VariantId> select_variants(const std::vector<RankingEntry>& ranking);

}  // namespace fce
