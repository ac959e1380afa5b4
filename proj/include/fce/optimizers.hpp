#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fce/fitness.hpp"
#include "fce/genome.hpp"
#include "fce/image.hpp"
#include "fce/rng.hpp"

namespace fce {

struct HyperParams {
    double change_prob = 0.5;
    double mutate_mu = 3.0;
    double mutate_sigma = 2.0;
    double membership_split_prob = 0.1;
    int pop_size = 30;
    int neighbors_per_gen = 10;
    double crossover_swap_prob = 0.5;
    double edge_threshold = 20.0;
    EntropySource entropy_source = EntropySource::sobel;

    /// Wall-clock budget, checked between generations.
    std::optional<double> time_budget_s = 120.0;
    std::optional<int> max_generations;

    std::uint64_t seed = 0;
    /// When false the defuzzification targets stay at their initial values.
    bool mutable_targets = true;
    /// Evaluate the candidates of one generation concurrently.
    bool parallel = true;

    /// Throws std::invalid_argument on out-of-range values or when neither
    /// a time budget nor a generation cap is set.
    void validate() const;

    FitnessOptions fitness_options() const { return {edge_threshold, entropy_source}; }
};

enum class VariantId { hc_simple, hc_split_traptri, hc_split_gauss, ga_comma, ga_plus };

inline constexpr VariantId kAllVariants[] = {VariantId::hc_simple, VariantId::hc_split_traptri,
                                             VariantId::hc_split_gauss, VariantId::ga_comma,
                                             VariantId::ga_plus};

std::string_view to_string(VariantId v);
VariantId variant_from_string(std::string_view name);
bool is_hill_climbing(VariantId v);
/// Starting genome family for the variant.
FamilySet family_set_of(VariantId v);

struct GenerationRecord {
    int generation = 0;
    double best_so_far = 0.0;
    /// Hill climbing: best neighbour of this generation.
    /// GA: best member of the population after joining.
    double gen_best = 0.0;
    double elapsed_s = 0.0;
    std::size_t genome_size = 0;
};

struct RunTrace {
    VariantId variant = VariantId::hc_simple;
    /// Record 0 is the initial evaluation; record g is generation g.
    std::vector<GenerationRecord> records;
    Genome best;
    FitnessReport best_report;
    /// Hill-climbing generations whose best neighbour tied the incumbent.
    int ties = 0;

    int generations() const { return static_cast<int>(records.size()) - 1; }
};

// ---------------------------------------------------------------------------
// Variation operators. All of them repair their output onto the type
// invariants and never reject a candidate.

/// With probability change_prob per function, shifts each parameter by
/// s*mutate_mu + N(0, mutate_sigma) with a fair random sign s. Sigmoid
/// slopes are perturbed in transition-width space so that every parameter
/// moves in intensity units.
Genome shape_mutate(const Genome& g, const HyperParams& hp, Rng& rng);

/// The two halves a function splits into (before repair).
std::pair<MembershipFunction, MembershipFunction> split_function(const MembershipFunction& fn);

/// Replaces function `index` with its two halves.
Genome split_at(const Genome& g, std::size_t index);

/// With probability membership_split_prob splits a uniformly chosen function,
/// otherwise delegates to shape_mutate.
Genome split_mutate(const Genome& g, const HyperParams& hp, Rng& rng);

/// Swaps position i of the two parents with probability p. Throws GenomeError
/// when the parents differ in length.
std::pair<Genome, Genome> uniform_crossover(const Genome& a, const Genome& b, double p, Rng& rng);

/// Length-preserving mutation used by the GA.
Genome ga_mutate(const Genome& g, const HyperParams& hp, Rng& rng);

// ---------------------------------------------------------------------------
// Optimizers. Randomness comes from substream(hp.seed, generation, candidate),
// so a run with a generation cap is fully reproducible.

RunTrace hill_climb(const Image& img, VariantId variant, const HyperParams& hp);
RunTrace genetic_algorithm(const Image& img, VariantId variant, const HyperParams& hp);
RunTrace run_variant(const Image& img, VariantId variant, const HyperParams& hp);

/// (final best F - initial F) / generations. A degenerate initial F is
/// replaced by the first finite best-so-far; a trace that never leaves the
/// degenerate region scores 0. Throws std::invalid_argument for a trace
/// without any completed generation.
double improvement_rate(std::span<const GenerationRecord> records);
inline double improvement_rate(const RunTrace& trace) { return improvement_rate(trace.records); }

}  // namespace fce
