#pragma once

#include "fce/image.hpp"
#include "fce/kernels.hpp"

namespace fce {

/// 3x3 Sobel magnitude sqrt(gx^2 + gy^2) with replicated borders.
GradientField sobel(const GrayImage& img, Exec exec = Exec::parallel);

HsvImage rgb_to_hsv(const ColorImage& img, Exec exec = Exec::parallel);

/// Throws ImageError when the planes disagree in size.
ColorImage hsv_to_rgb(const HsvImage& hsv, Exec exec = Exec::parallel);

/// Shannon entropy in bits of a 256-bin histogram; empty bins contribute 0.
double entropy(const Histogram& hist);
double entropy(const GrayImage& img, Exec exec = Exec::parallel);
/// Magnitudes are binned by rounding half up and clamping to [0,255].
double entropy(const GradientField& field, Exec exec = Exec::parallel);

/// Cumulative-histogram remap: level z goes to floor(255 * cdf(z) / (M*N)).
LutTable equalization_lut(const GrayImage& img);
GrayImage histogram_equalize(const GrayImage& img, Exec exec = Exec::parallel);

}  // namespace fce
