#include "fce/optimizers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fce {

void HyperParams::validate() const {
    auto prob = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
        }
    };
    prob(change_prob, "change-prob");
    prob(membership_split_prob, "membership-split-prob");
    prob(crossover_swap_prob, "crossover-swap-prob");
    if (!std::isfinite(mutate_mu)) throw std::invalid_argument("mutate-mu must be finite");
    if (!(mutate_sigma >= 0.0) || !std::isfinite(mutate_sigma)) {
        throw std::invalid_argument("mutate-sigma must be non-negative");
    }
    if (pop_size < 1) throw std::invalid_argument("pop-size must be positive");
    if (neighbors_per_gen < 1) throw std::invalid_argument("neighbors-per-gen must be positive");
    if (!(edge_threshold >= 0.0)) throw std::invalid_argument("edge-threshold must be >= 0");
    if (time_budget_s && !(*time_budget_s > 0.0)) {
        throw std::invalid_argument("per-run-time must be positive");
    }
    if (max_generations && *max_generations < 0) {
        throw std::invalid_argument("max-generations must be >= 0");
    }
    if (!time_budget_s && !max_generations) {
        throw std::invalid_argument("either a time budget or a generation cap is required");
    }
}

std::string_view to_string(VariantId v) {
    switch (v) {
        case VariantId::hc_simple: return "HC-simple";
        case VariantId::hc_split_traptri: return "HC-split-traptri";
        case VariantId::hc_split_gauss: return "HC-split-gauss";
        case VariantId::ga_comma: return "GA-comma";
        case VariantId::ga_plus: return "GA-plus";
    }
    return "unknown";
}

VariantId variant_from_string(std::string_view name) {
    for (const VariantId v : kAllVariants) {
        if (to_string(v) == name) return v;
    }
    throw std::invalid_argument("unknown variant '" + std::string(name) +
                                "' (expected HC-simple, HC-split-traptri, HC-split-gauss, "
                                "GA-comma or GA-plus)");
}

bool is_hill_climbing(VariantId v) {
    return v == VariantId::hc_simple || v == VariantId::hc_split_traptri ||
           v == VariantId::hc_split_gauss;
}

FamilySet family_set_of(VariantId v) {
    switch (v) {
        case VariantId::hc_simple:
        case VariantId::hc_split_traptri: return FamilySet::trapezoid_triangle;
        case VariantId::hc_split_gauss: return FamilySet::gaussian_only;
        case VariantId::ga_comma:
        case VariantId::ga_plus: return FamilySet::gaussian_sigmoid;
    }
    return FamilySet::trapezoid_triangle;
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_ = Clock::now();
};

bool budget_left(const HyperParams& hp, int next_generation, const Stopwatch& clock) {
    if (hp.max_generations && next_generation > *hp.max_generations) return false;
    if (hp.time_budget_s && clock.seconds() >= *hp.time_budget_s) return false;
    return true;
}

// Each candidate is evaluated with serial kernels; the concurrency lives at
// the candidate level.
std::vector<FitnessReport> evaluate_all(const GrayImage& plane, std::span<const Genome> genomes,
                                        const HyperParams& hp) {
    std::vector<FitnessReport> out(genomes.size());
    const FitnessOptions opts = hp.fitness_options();
    const auto n = static_cast<std::ptrdiff_t>(genomes.size());
#pragma omp parallel for schedule(dynamic) if (hp.parallel && n > 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = fitness_of_genome(plane, genomes[k], opts, Exec::serial);
    }
    return out;
}

// Index of the first maximum by F.
std::size_t argmax(std::span<const FitnessReport> reports) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].F > reports[best].F) best = i;
    }
    return best;
}

}  // namespace

RunTrace hill_climb(const Image& img, VariantId variant, const HyperParams& hp) {
    if (!is_hill_climbing(variant)) {
        throw std::invalid_argument(std::string(to_string(variant)) + " is not a hill-climbing variant");
    }
    hp.validate();
    const Stopwatch clock;
    const GrayImage plane = intensity_plane(img, Exec::serial);
    const FitnessOptions opts = hp.fitness_options();

    Genome incumbent = default_genome(family_set_of(variant));
    FitnessReport incumbent_report = fitness_of_genome(plane, incumbent, opts, Exec::serial);

    RunTrace trace{variant, {}, incumbent, incumbent_report, 0};
    trace.records.push_back(
        {0, incumbent_report.F, incumbent_report.F, clock.seconds(), incumbent.size()});

    const auto n = static_cast<std::size_t>(hp.neighbors_per_gen);
    for (int gen = 1; budget_left(hp, gen, clock); ++gen) {
        std::vector<Genome> neighbors;
        neighbors.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rng rng = substream(hp.seed, static_cast<std::uint64_t>(gen), i);
            neighbors.push_back(variant == VariantId::hc_simple ? shape_mutate(incumbent, hp, rng)
                                                                : split_mutate(incumbent, hp, rng));
        }
        const std::vector<FitnessReport> reports = evaluate_all(plane, neighbors, hp);
        const std::size_t best = argmax(reports);

        if (reports[best].F > incumbent_report.F) {
            incumbent = neighbors[best];
            incumbent_report = reports[best];
        } else if (reports[best].F == incumbent_report.F && !incumbent_report.degenerate) {
            ++trace.ties;
        }
        trace.records.push_back(
            {gen, incumbent_report.F, reports[best].F, clock.seconds(), incumbent.size()});
    }
    trace.best = incumbent;
    trace.best_report = incumbent_report;
    return trace;
}

namespace {

std::size_t tournament(std::span<const FitnessReport> reports, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, reports.size() - 1);
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    return reports[b].F > reports[a].F ? b : a;
}

}  // namespace

RunTrace genetic_algorithm(const Image& img, VariantId variant, const HyperParams& hp) {
    if (variant != VariantId::ga_comma && variant != VariantId::ga_plus) {
        throw std::invalid_argument(std::string(to_string(variant)) + " is not a GA variant");
    }
    hp.validate();
    const Stopwatch clock;
    const GrayImage plane = intensity_plane(img, Exec::serial);
    const auto pop_size = static_cast<std::size_t>(hp.pop_size);

    // One unmodified seed genome plus shape-mutated copies of it.
    const Genome seed_genome = default_genome(family_set_of(variant));
    std::vector<Genome> population;
    population.reserve(pop_size);
    population.push_back(seed_genome);
    for (std::size_t i = 1; i < pop_size; ++i) {
        Rng rng = substream(hp.seed, 0, i);
        population.push_back(shape_mutate(seed_genome, hp, rng));
    }
    std::vector<FitnessReport> reports = evaluate_all(plane, population, hp);

    std::size_t best = argmax(reports);
    RunTrace trace{variant, {}, population[best], reports[best], 0};
    trace.records.push_back(
        {0, reports[best].F, reports[best].F, clock.seconds(), population[best].size()});

    for (int gen = 1; budget_left(hp, gen, clock); ++gen) {
        std::vector<Genome> children;
        children.reserve(pop_size + 1);
        for (std::size_t pair = 0; children.size() < pop_size; ++pair) {
            Rng rng = substream(hp.seed, static_cast<std::uint64_t>(gen), pair);
            const std::size_t a = tournament(reports, rng);
            const std::size_t b = tournament(reports, rng);
            auto [first, second] =
                uniform_crossover(population[a], population[b], hp.crossover_swap_prob, rng);
            children.push_back(ga_mutate(first, hp, rng));
            Genome other = ga_mutate(second, hp, rng);
            if (children.size() < pop_size) children.push_back(std::move(other));
        }
        std::vector<FitnessReport> child_reports = evaluate_all(plane, children, hp);

        if (variant == VariantId::ga_comma) {
            population = std::move(children);
            reports = std::move(child_reports);
        } else {
            // Parents precede children so ties keep the older individual.
            std::vector<Genome> pool = std::move(population);
            pool.insert(pool.end(), std::make_move_iterator(children.begin()),
                        std::make_move_iterator(children.end()));
            std::vector<FitnessReport> pool_reports = std::move(reports);
            pool_reports.insert(pool_reports.end(), child_reports.begin(), child_reports.end());

            std::vector<std::size_t> order(pool.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                return pool_reports[x].F > pool_reports[y].F;
            });
            population.clear();
            reports.clear();
            for (std::size_t i = 0; i < pop_size; ++i) {
                population.push_back(pool[order[i]]);
                reports.push_back(pool_reports[order[i]]);
            }
        }

        best = argmax(reports);
        if (reports[best].F > trace.best_report.F) {
            trace.best = population[best];
            trace.best_report = reports[best];
        }
        trace.records.push_back({gen, trace.best_report.F, reports[best].F, clock.seconds(),
                                 trace.best.size()});
    }
    return trace;
}

RunTrace run_variant(const Image& img, VariantId variant, const HyperParams& hp) {
    return is_hill_climbing(variant) ? hill_climb(img, variant, hp)
                                     : genetic_algorithm(img, variant, hp);
}

double improvement_rate(std::span<const GenerationRecord> records) {
    if (records.size() < 2) {
        throw std::invalid_argument("improvement rate needs at least one completed generation");
    }
    const auto first_finite =
        std::find_if(records.begin(), records.end(),
                     [](const GenerationRecord& r) { return std::isfinite(r.best_so_far); });
    if (first_finite == records.end()) return 0.0;
    const double initial = first_finite->best_so_far;
    const double final_best = records.back().best_so_far;
    return (final_best - initial) / static_cast<double>(records.size() - 1);
}

}  // namespace fce
