#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fce/genome.hpp"
#include "fce/image.hpp"
#include "fce/kernels.hpp"
#include "fce/transfer.hpp"

namespace fce {

/// Which raster the entropy term is taken over.
enum class EntropySource { sobel, enhanced };

std::string_view to_string(EntropySource src);
EntropySource entropy_source_from_string(std::string_view name);

struct FitnessOptions {
    /// A pixel counts as an edge when its Sobel magnitude exceeds this.
    double edge_threshold = 20.0;
    EntropySource entropy_source = EntropySource::sobel;
};

/// Objective F = ln(ln(E)) * ne / (M*N) * H over the Sobel image, where E is
/// the summed gradient magnitude, ne the edge-pixel count and H the entropy in
/// bits. When E <= e the double log is undefined; F is then -infinity and
/// `degenerate` is set.
struct FitnessReport {
    double F = 0.0;
    double E = 0.0;
    std::uint64_t ne = 0;
    double H = 0.0;
    int M = 0;  ///< width
    int N = 0;  ///< height
    bool degenerate = false;

    double edge_fraction() const {
        return static_cast<double>(ne) / (static_cast<double>(M) * static_cast<double>(N));
    }

    bool operator==(const FitnessReport&) const = default;
};

FitnessReport evaluate(const GrayImage& img, const FitnessOptions& opts = {},
                       Exec exec = Exec::parallel);

/// Fitness of the plane after the genome's transfer function. `plane` is the
/// grayscale image or the HSV value plane of a color image (see intensity_plane).
FitnessReport fitness_of_genome(const GrayImage& plane, const Genome& g,
                                const FitnessOptions& opts = {}, Exec exec = Exec::parallel);
FitnessReport fitness_of_genome(const Image& img, const Genome& g, const FitnessOptions& opts = {},
                                Exec exec = Exec::parallel);

/// The fitness of an image as-is: grayscale directly, color on its value plane.
FitnessReport evaluate_image(const Image& img, const FitnessOptions& opts = {},
                             Exec exec = Exec::parallel);

/// One JSON object {F, E, ne, H, M, N, degenerate}. A degenerate F is written as null.
std::string to_json(const FitnessReport& report);
FitnessReport fitness_report_from_json(std::string_view text);

/// after.F - before.F, or nullopt when either side is degenerate.
std::optional<double> fitness_delta(const FitnessReport& before, const FitnessReport& after);

}  // namespace fce
