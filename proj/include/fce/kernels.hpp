#pragma once

// Per-pixel kernels in two flavours. `serial` is the straight-line reference
// implementation; `parallel` is the OpenMP version used by default. Every
// parallel kernel writes each output element from exactly one iteration, so
// both flavours produce bit-identical results.

#include <array>
#include <cstdint>

#include "fce/image.hpp"

namespace fce {

enum class Exec { serial, parallel };

using Histogram = std::array<std::uint64_t, 256>;
using LutTable = std::array<std::uint8_t, 256>;

namespace serial {

GradientField sobel(const GrayImage& img);
GrayImage apply_lut(const GrayImage& img, const LutTable& lut);
HsvImage rgb_to_hsv(const ColorImage& img);
ColorImage hsv_to_rgb(const HsvImage& hsv);
Histogram histogram(std::span<const std::uint8_t> pixels);
Histogram binned_histogram(std::span<const double> values);

}  // namespace serial

namespace parallel {

GradientField sobel(const GrayImage& img);
GrayImage apply_lut(const GrayImage& img, const LutTable& lut);
HsvImage rgb_to_hsv(const ColorImage& img);
ColorImage hsv_to_rgb(const HsvImage& hsv);
Histogram histogram(std::span<const std::uint8_t> pixels);
Histogram binned_histogram(std::span<const double> values);

}  // namespace parallel

namespace detail {

// Shared scalar pieces; both kernel flavours call these per element.

inline int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

/// Round half up, then clamp to [0,255].
std::uint8_t bin_of(double value);

void rgb_to_hsv_pixel(Rgb px, float& hue, float& saturation, std::uint8_t& value);
Rgb hsv_to_rgb_pixel(float hue, float saturation, std::uint8_t value);

double sobel_at(const GrayImage& img, int x, int y);

void check_hsv_planes(const HsvImage& hsv);

}  // namespace detail

}  // namespace fce
