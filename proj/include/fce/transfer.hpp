#pragma once

#include <filesystem>
#include <string>

#include "fce/genome.hpp"
#include "fce/image.hpp"
#include "fce/kernels.hpp"

namespace fce {

/// Total membership below which defuzzification falls back to identity.
inline constexpr double kMembershipEpsilon = 1e-9;

struct Defuzzified {
    double value = 0.0;     ///< crisp output, clamped to [0,255]
    bool fallback = false;  ///< true when no function covered the input
};

/// Weighted average of the targets, sum(mu_i(z0) * v_i) / sum(mu_i(z0)).
Defuzzified defuzzify(const Genome& g, double z0);

/// 256-entry intensity map. `fallback_count` counts the inputs that took the
/// identity fallback while building it.
struct TransferLut {
    LutTable map{};
    int fallback_count = 0;

    bool operator==(const TransferLut&) const = default;
};

/// map[z] = round-half-up(defuzzify(g, z)).
TransferLut build_lut(const Genome& g);

TransferLut identity_lut();

GrayImage apply_lut(const GrayImage& img, const TransferLut& lut, Exec exec = Exec::parallel);

/// Grayscale: apply the LUT directly. Color: apply it to the HSV value plane.
Image enhance(const Image& img, const TransferLut& lut, Exec exec = Exec::parallel);
Image enhance(const Image& img, const Genome& g, Exec exec = Exec::parallel);

/// The plane a transfer function acts on: the image itself when grayscale,
/// otherwise the HSV value plane.
GrayImage intensity_plane(const Image& img, Exec exec = Exec::parallel);

/// "index,value" header followed by 256 rows.
std::string lut_to_csv(const TransferLut& lut);
void write_lut_file(const TransferLut& lut, const std::filesystem::path& path);

}  // namespace fce
