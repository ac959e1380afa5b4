#include "fce/transfer.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "fce/image_ops.hpp"

namespace fce {

Defuzzified defuzzify(const Genome& g, double z0) {
    double weight = 0.0;
    double weighted = 0.0;
    for (const auto& fn : g.functions()) {
        const double mu = fn(z0);
        weight += mu;
        weighted += mu * fn.v;
    }
    if (weight < kMembershipEpsilon) {
        return {std::clamp(z0, 0.0, 255.0), true};
    }
    return {std::clamp(weighted / weight, 0.0, 255.0), false};
}

TransferLut build_lut(const Genome& g) {
    TransferLut lut;
    for (int z = 0; z < 256; ++z) {
        const Defuzzified d = defuzzify(g, static_cast<double>(z));
        lut.map[static_cast<std::size_t>(z)] = detail::bin_of(d.value);
        lut.fallback_count += d.fallback ? 1 : 0;
    }
    return lut;
}

TransferLut identity_lut() {
    TransferLut lut;
    for (std::size_t z = 0; z < lut.map.size(); ++z) lut.map[z] = static_cast<std::uint8_t>(z);
    return lut;
}

GrayImage apply_lut(const GrayImage& img, const TransferLut& lut, Exec exec) {
    return exec == Exec::parallel ? parallel::apply_lut(img, lut.map)
                                  : serial::apply_lut(img, lut.map);
}

Image enhance(const Image& img, const TransferLut& lut, Exec exec) {
    if (const auto* gray = std::get_if<GrayImage>(&img)) {
        return apply_lut(*gray, lut, exec);
    }
    HsvImage hsv = rgb_to_hsv(std::get<ColorImage>(img), exec);
    hsv.value = apply_lut(hsv.value, lut, exec);
    return hsv_to_rgb(hsv, exec);
}

Image enhance(const Image& img, const Genome& g, Exec exec) {
    return enhance(img, build_lut(g), exec);
}

GrayImage intensity_plane(const Image& img, Exec exec) {
    if (const auto* gray = std::get_if<GrayImage>(&img)) {
        return *gray;
    }
    return rgb_to_hsv(std::get<ColorImage>(img), exec).value;
}

std::string lut_to_csv(const TransferLut& lut) {
    std::string out = "index,value\n";
    for (std::size_t z = 0; z < lut.map.size(); ++z) {
        out += std::to_string(z) + "," + std::to_string(lut.map[z]) + "\n";
    }
    return out;
}

void write_lut_file(const TransferLut& lut, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << lut_to_csv(lut);
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace fce
