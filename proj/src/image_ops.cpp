#include "fce/image_ops.hpp"

#include <cmath>

namespace fce {

GradientField sobel(const GrayImage& img, Exec exec) {
    return exec == Exec::parallel ? parallel::sobel(img) : serial::sobel(img);
}

HsvImage rgb_to_hsv(const ColorImage& img, Exec exec) {
    return exec == Exec::parallel ? parallel::rgb_to_hsv(img) : serial::rgb_to_hsv(img);
}

ColorImage hsv_to_rgb(const HsvImage& hsv, Exec exec) {
    return exec == Exec::parallel ? parallel::hsv_to_rgb(hsv) : serial::hsv_to_rgb(hsv);
}

double entropy(const Histogram& hist) {
    std::uint64_t total = 0;
    for (const auto c : hist) total += c;
    if (total == 0) return 0.0;
    double h = 0.0;
    const double n = static_cast<double>(total);
    for (const auto c : hist) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    // A single occupied bin yields -1*log2(1) = -0.0.
    return h > 0.0 ? h : 0.0;
}

double entropy(const GrayImage& img, Exec exec) {
    return entropy(exec == Exec::parallel ? parallel::histogram(img.pixels())
                                          : serial::histogram(img.pixels()));
}

double entropy(const GradientField& field, Exec exec) {
    return entropy(exec == Exec::parallel ? parallel::binned_histogram(field.magnitudes)
                                          : serial::binned_histogram(field.magnitudes));
}

LutTable equalization_lut(const GrayImage& img) {
    const Histogram hist = serial::histogram(img.pixels());
    const std::uint64_t total = img.size();
    LutTable lut{};
    std::uint64_t cdf = 0;
    for (std::size_t z = 0; z < lut.size(); ++z) {
        cdf += hist[z];
        lut[z] = static_cast<std::uint8_t>((255 * cdf) / total);
    }
    return lut;
}

GrayImage histogram_equalize(const GrayImage& img, Exec exec) {
    const LutTable lut = equalization_lut(img);
    return exec == Exec::parallel ? parallel::apply_lut(img, lut) : serial::apply_lut(img, lut);
}

}  // namespace fce
