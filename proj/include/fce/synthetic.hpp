#pragma once

#include <cstdint>

#include "fce/image.hpp"

namespace fce::synthetic {

/// Uniform random intensities in [0,255].
GrayImage random_gray(int width, int height, std::uint64_t seed);
ColorImage random_color(int width, int height, std::uint64_t seed);

/// A soft background gradient with a few rectangles and discs plus mild
/// noise, linearly compressed into [low, high]. Deterministic in `seed`.
GrayImage low_contrast_scene(int width, int height, std::uint64_t seed, std::uint8_t low = 100,
                             std::uint8_t high = 156);

/// Color version of low_contrast_scene: the gray scene modulates a few hues.
ColorImage low_contrast_color_scene(int width, int height, std::uint64_t seed,
                                    std::uint8_t low = 100, std::uint8_t high = 156);

}  // namespace fce::synthetic
