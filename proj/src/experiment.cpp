#include "fce/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fce/image_io.hpp"
#include "fce/image_ops.hpp"
#include "fce/trace_io.hpp"

namespace fce {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void ExperimentConfig::validate() const {
    if (variants.empty()) throw std::invalid_argument("nothing to benchmark: no variants listed");
    if (images.empty()) throw std::invalid_argument("nothing to benchmark: no images listed");
    if (num_of_test < 1) throw std::invalid_argument("num_of_test must be positive");
    if (!(per_run_time > 0.0)) throw std::invalid_argument("per_run_time must be positive");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    run_params(hp.seed).validate();
}

HyperParams ExperimentConfig::run_params(std::uint64_t seed) const {
    HyperParams p = hp;
    p.seed = seed;
    if (p.max_generations) {
        p.time_budget_s.reset();
    } else {
        p.time_budget_s = per_run_time;
    }
    if (jobs > 1) p.parallel = false;
    return p;
}

namespace {

std::string normalized_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

const std::string& single(const CLI::ConfigItem& item) {
    if (item.inputs.size() != 1) {
        throw std::invalid_argument("config key '" + item.name + "' expects a single value");
    }
    return item.inputs.front();
}

double as_double(const CLI::ConfigItem& item) {
    try {
        std::size_t used = 0;
        const double v = std::stod(single(item), &used);
        if (used != single(item).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("config key '" + item.name + "' expects a number, got '" +
                                    single(item) + "'");
    }
}

long long as_integer(const CLI::ConfigItem& item) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(single(item), &used);
        if (used != single(item).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("config key '" + item.name + "' expects an integer, got '" +
                                    single(item) + "'");
    }
}

bool as_bool(const CLI::ConfigItem& item) {
    const std::string& s = single(item);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw std::invalid_argument("config key '" + item.name + "' expects true/false, got '" + s + "'");
}

fs::path resolve(const fs::path& base, const std::string& p) {
    const fs::path path(p);
    return (path.is_absolute() || base.empty()) ? path : base / path;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text, const fs::path& base_dir) {
    std::istringstream in{std::string(text)};
    const std::vector<CLI::ConfigItem> items = CLI::ConfigTOML().from_config(in);

    ExperimentConfig cfg;
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") continue;  // section markers
        if (!item.parents.empty()) {
            throw std::invalid_argument("config sections are not supported (key '" +
                                        item.fullname() + "')");
        }
        const std::string key = normalized_key(item.name);
        HyperParams& hp = cfg.hp;
        if (key == "images") {
            cfg.images.clear();
            for (const auto& s : item.inputs) cfg.images.push_back(resolve(base_dir, s));
        } else if (key == "variants") {
            cfg.variants.clear();
            for (const auto& s : item.inputs) {
                if (!s.empty()) cfg.variants.push_back(variant_from_string(s));
            }
        } else if (key == "num_of_test") {
            cfg.num_of_test = static_cast<int>(as_integer(item));
        } else if (key == "per_run_time") {
            cfg.per_run_time = as_double(item);
        } else if (key == "max_generations") {
            hp.max_generations = static_cast<int>(as_integer(item));
        } else if (key == "seed") {
            hp.seed = static_cast<std::uint64_t>(as_integer(item));
        } else if (key == "output_dir") {
            cfg.output_dir = resolve(base_dir, single(item));
        } else if (key == "jobs") {
            cfg.jobs = static_cast<int>(as_integer(item));
        } else if (key == "change_prob") {
            hp.change_prob = as_double(item);
        } else if (key == "mutate_mu") {
            hp.mutate_mu = as_double(item);
        } else if (key == "mutate_sigma") {
            hp.mutate_sigma = as_double(item);
        } else if (key == "membership_split_prob") {
            hp.membership_split_prob = as_double(item);
        } else if (key == "pop_size") {
            hp.pop_size = static_cast<int>(as_integer(item));
        } else if (key == "neighbors_per_gen") {
            hp.neighbors_per_gen = static_cast<int>(as_integer(item));
        } else if (key == "crossover_swap_prob") {
            hp.crossover_swap_prob = as_double(item);
        } else if (key == "edge_threshold") {
            hp.edge_threshold = as_double(item);
        } else if (key == "entropy_source") {
            hp.entropy_source = entropy_source_from_string(single(item));
        } else if (key == "mutable_targets") {
            hp.mutable_targets = as_bool(item);
        } else {
            throw std::invalid_argument("unknown config key '" + item.name + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string() + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str(), path.parent_path());
}

std::uint64_t run_seed(std::uint64_t master, const fs::path& image, VariantId variant, int run) {
    return combine_seeds({master, hash_string(image.generic_string()),
                          hash_string(to_string(variant)), static_cast<std::uint64_t>(run)});
}

// ---------------------------------------------------------------------------

namespace {

std::optional<double> mean_of(const std::vector<double>& xs) {
    if (xs.empty()) return std::nullopt;
    double sum = 0.0;
    for (const double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

ordered_json number_or_null(std::optional<double> x) {
    if (!x || !std::isfinite(*x)) return nullptr;
    return *x;
}

ordered_json report_json(const FitnessReport& r) {
    return ordered_json::parse(to_json(r));
}

std::string cell_stem(std::size_t image_index, const fs::path& image, VariantId variant, int run) {
    return std::to_string(image_index) + "-" + image.stem().string() + "__" +
           std::string(to_string(variant)) + "__run" + std::to_string(run);
}

struct CellTask {
    std::size_t cell = 0;
    int run = 0;
};

}  // namespace

std::vector<RankingEntry> rank_variants(const std::vector<VariantId>& variants,
                                        const std::vector<CellResult>& cells) {
    std::vector<RankingEntry> ranking;
    for (const VariantId v : variants) {
        std::vector<double> rates;
        for (const auto& cell : cells) {
            if (cell.variant != v) continue;
            for (const auto& run : cell.runs) {
                if (run.ok) rates.push_back(run.improvement_rate);
            }
        }
        ranking.push_back({v, mean_of(rates), static_cast<int>(rates.size())});
    }
    std::stable_sort(ranking.begin(), ranking.end(), [](const RankingEntry& a, const RankingEntry& b) {
        if (!b.mean_improvement_rate) return a.mean_improvement_rate.has_value();
        if (!a.mean_improvement_rate) return false;
        return *a.mean_improvement_rate > *b.mean_improvement_rate;
    });
    return ranking;
}

std::vector<VariantId> select_variants(const std::vector<RankingEntry>& ranking) {
    std::vector<VariantId> picked;
    const auto best_of = [&](bool hill_climbing) {
        for (const auto& e : ranking) {
            if (e.mean_improvement_rate && is_hill_climbing(e.variant) == hill_climbing) {
                picked.push_back(e.variant);
                return;
            }
        }
    };
    best_of(true);
    best_of(false);
    if (picked.size() < 2) {
        for (const auto& e : ranking) {
            if (picked.size() >= 2) break;
            if (e.mean_improvement_rate &&
                std::find(picked.begin(), picked.end(), e.variant) == picked.end()) {
                picked.push_back(e.variant);
            }
        }
    }
    // Report in rank order.
    std::stable_sort(picked.begin(), picked.end(), [&](VariantId a, VariantId b) {
        const auto pos = [&](VariantId v) {
            return std::find_if(ranking.begin(), ranking.end(),
                                [v](const RankingEntry& e) { return e.variant == v; }) -
                   ranking.begin();
        };
        return pos(a) < pos(b);
    });
    return picked;
}

BenchmarkReport run_benchmark(const ExperimentConfig& config) {
    config.validate();
    const fs::path trace_dir = config.output_dir / "traces";
    const fs::path genome_dir = config.output_dir / "genomes";
    fs::create_directories(trace_dir);
    fs::create_directories(genome_dir);

    BenchmarkReport report{config, {}, {}, {}, {}};
    const FitnessOptions opts = config.hp.fitness_options();

    std::vector<std::optional<Image>> loaded(config.images.size());
    for (std::size_t i = 0; i < config.images.size(); ++i) {
        ImageSummary summary;
        summary.path = config.images[i];
        try {
            Image img = load_image(config.images[i]);
            summary.width = width_of(img);
            summary.height = height_of(img);
            const GrayImage plane = intensity_plane(img);
            summary.original = evaluate(plane, opts);
            summary.equalized = evaluate(histogram_equalize(plane), opts);
            summary.ok = true;
            loaded[i] = std::move(img);
        } catch (const std::exception& e) {
            summary.error = e.what();
        }
        report.images.push_back(std::move(summary));
    }

    std::vector<CellTask> tasks;
    for (std::size_t i = 0; i < config.images.size(); ++i) {
        for (const VariantId v : config.variants) {
            CellResult cell;
            cell.image_index = i;
            cell.variant = v;
            cell.runs.resize(static_cast<std::size_t>(config.num_of_test));
            for (int r = 0; r < config.num_of_test; ++r) {
                cell.runs[static_cast<std::size_t>(r)].run = r;
                tasks.push_back({report.cells.size(), r});
            }
            report.cells.push_back(std::move(cell));
        }
    }

    const bool timed = !config.hp.max_generations.has_value();
    const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs) if (config.jobs > 1)
    for (std::ptrdiff_t t = 0; t < task_count; ++t) {
        const CellTask task = tasks[static_cast<std::size_t>(t)];
        CellResult& cell = report.cells[task.cell];
        RunResult& result = cell.runs[static_cast<std::size_t>(task.run)];
        const fs::path& image_path = config.images[cell.image_index];
        result.seed = run_seed(config.hp.seed, image_path, cell.variant, task.run);
        try {
            const auto& img = loaded[cell.image_index];
            if (!img) throw std::runtime_error(report.images[cell.image_index].error);
            const RunTrace trace = run_variant(*img, cell.variant, config.run_params(result.seed));
            const std::string stem = cell_stem(cell.image_index, image_path, cell.variant, task.run);
            result.trace_file = trace_dir / (stem + ".csv");
            result.genome_file = genome_dir / (stem + ".json");
            write_trace_file(trace.records, result.trace_file, timed);
            write_genome_file(trace.best, result.genome_file);
            result.generations = trace.generations();
            result.final_F = trace.best_report.F;
            result.improvement_rate = improvement_rate(trace);
            result.ok = true;
        } catch (const std::exception& e) {
            result.ok = false;
            result.error = e.what();
        }
    }

    for (auto& cell : report.cells) {
        std::vector<double> rates, finals, gens;
        for (const auto& run : cell.runs) {
            if (!run.ok) continue;
            rates.push_back(run.improvement_rate);
            finals.push_back(run.final_F);
            gens.push_back(static_cast<double>(run.generations));
        }
        cell.mean_improvement_rate = mean_of(rates);
        cell.mean_final_F = mean_of(finals);
        cell.mean_generations = mean_of(gens);
    }
    report.ranking = rank_variants(config.variants, report.cells);
    report.selected = select_variants(report.ranking);

    std::ofstream(config.output_dir / "report.json", std::ios::binary) << report.to_json();
    std::ofstream(config.output_dir / "report.txt", std::ios::binary) << report.to_table();
    return report;
}

std::string BenchmarkReport::to_json() const {
    const HyperParams& hp = config.hp;
    ordered_json doc;
    doc["config"] = {
        {"num_of_test", config.num_of_test},
        {"per_run_time", config.per_run_time},
        {"max_generations", hp.max_generations ? ordered_json(*hp.max_generations) : nullptr},
        {"change_prob", hp.change_prob},
        {"mutate_mu", hp.mutate_mu},
        {"mutate_sigma", hp.mutate_sigma},
        {"membership_split_prob", hp.membership_split_prob},
        {"pop_size", hp.pop_size},
        {"neighbors_per_gen", hp.neighbors_per_gen},
        {"crossover_swap_prob", hp.crossover_swap_prob},
        {"edge_threshold", hp.edge_threshold},
        {"entropy_source", std::string(fce::to_string(hp.entropy_source))},
        {"mutable_targets", hp.mutable_targets},
        {"seed", hp.seed},
        {"variants", [&] {
             ordered_json v = ordered_json::array();
             for (const VariantId id : config.variants) v.push_back(std::string(fce::to_string(id)));
             return v;
         }()},
    };

    ordered_json images_json = ordered_json::array();
    for (std::size_t i = 0; i < images.size(); ++i) {
        const ImageSummary& img = images[i];
        ordered_json entry = {{"path", img.path.generic_string()}, {"ok", img.ok}};
        if (img.ok) {
            entry["width"] = img.width;
            entry["height"] = img.height;
            entry["original"] = report_json(img.original);
            entry["histogram_equalized"] = report_json(img.equalized);
            entry["equalization_delta_F"] = number_or_null(fitness_delta(img.original, img.equalized));
        } else {
            entry["error"] = img.error;
        }
        ordered_json variants_json = ordered_json::array();
        for (const auto& cell : cells) {
            if (cell.image_index != i) continue;
            ordered_json runs = ordered_json::array();
            for (const auto& run : cell.runs) {
                ordered_json r = {{"run", run.run}, {"seed", run.seed}, {"ok", run.ok}};
                if (run.ok) {
                    r["trace"] = run.trace_file.filename().generic_string();
                    r["genome"] = run.genome_file.filename().generic_string();
                    r["improvement_rate"] = run.improvement_rate;
                    r["final_F"] = number_or_null(run.final_F);
                    r["generations"] = run.generations;
                } else {
                    r["error"] = run.error;
                }
                runs.push_back(std::move(r));
            }
            ordered_json c = {{"variant", std::string(fce::to_string(cell.variant))},
                              {"mean_improvement_rate", number_or_null(cell.mean_improvement_rate)},
                              {"mean_final_F", number_or_null(cell.mean_final_F)},
                              {"mean_generations", number_or_null(cell.mean_generations)},
                              {"runs", std::move(runs)}};
            if (img.ok && cell.mean_final_F && std::isfinite(*cell.mean_final_F) &&
                !img.equalized.degenerate) {
                c["delta_F_vs_equalized"] = *cell.mean_final_F - img.equalized.F;
            } else {
                c["delta_F_vs_equalized"] = nullptr;
            }
            variants_json.push_back(std::move(c));
        }
        entry["variants"] = std::move(variants_json);
        images_json.push_back(std::move(entry));
    }
    doc["images"] = std::move(images_json);

    ordered_json ranking_json = ordered_json::array();
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        ranking_json.push_back({{"rank", i + 1},
                                {"variant", std::string(fce::to_string(ranking[i].variant))},
                                {"mean_improvement_rate", number_or_null(ranking[i].mean_improvement_rate)},
                                {"successful_runs", ranking[i].successful_runs}});
    }
    doc["ranking"] = std::move(ranking_json);
    ordered_json selected_json = ordered_json::array();
    for (const VariantId v : selected) selected_json.push_back(std::string(fce::to_string(v)));
    doc["selected"] = std::move(selected_json);
    return doc.dump(2) + "\n";
}

std::string BenchmarkReport::to_table() const {
    const HyperParams& hp = config.hp;
    std::ostringstream out;
    const auto num = [](std::optional<double> x) {
        if (!x) return std::string("n/a");
        if (!std::isfinite(*x)) return std::string("-inf");
        std::ostringstream s;
        s << std::setprecision(6) << *x;
        return s.str();
    };
    out << "NumofTest=" << config.num_of_test << " PerRunTime=" << config.per_run_time
        << " ChangeProb=" << hp.change_prob << " MutateMu=" << hp.mutate_mu
        << " MutateSigma=" << hp.mutate_sigma << " MembershipSplitProb=" << hp.membership_split_prob
        << " PopSize=" << hp.pop_size << " NeighborsPerGen=" << hp.neighbors_per_gen
        << " EdgeThreshold=" << hp.edge_threshold;
    if (hp.max_generations) out << " MaxGenerations=" << *hp.max_generations;
    out << "\n\n";

    for (std::size_t i = 0; i < images.size(); ++i) {
        const ImageSummary& img = images[i];
        out << img.path.generic_string();
        if (!img.ok) {
            out << "  (failed: " << img.error << ")\n\n";
            continue;
        }
        out << "  " << img.width << "x" << img.height << "  F(original)=" << num(img.original.F)
            << "  F(hist-eq)=" << num(img.equalized.F) << "\n";
        out << "  " << std::left << std::setw(18) << "variant" << std::setw(16) << "mean rate"
            << std::setw(14) << "mean final F" << std::setw(12) << "mean gens" << "failed\n";
        for (const auto& cell : cells) {
            if (cell.image_index != i) continue;
            const auto failed = std::count_if(cell.runs.begin(), cell.runs.end(),
                                              [](const RunResult& r) { return !r.ok; });
            out << "  " << std::setw(18) << fce::to_string(cell.variant) << std::setw(16)
                << num(cell.mean_improvement_rate) << std::setw(14) << num(cell.mean_final_F)
                << std::setw(12) << num(cell.mean_generations) << failed << "\n";
        }
        out << "\n";
    }

    out << "Ranking by mean improvement rate:\n";
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        out << "  " << (i + 1) << ". " << std::left << std::setw(18)
            << fce::to_string(ranking[i].variant) << num(ranking[i].mean_improvement_rate) << "\n";
    }
    out << "Selected:";
    for (const VariantId v : selected) out << " " << fce::to_string(v);
    out << "\n";
    return out.str();
}

}  // namespace fce
