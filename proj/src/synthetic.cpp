#include "fce/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fce/rng.hpp"

namespace fce::synthetic {

GrayImage random_gray(int width, int height, std::uint64_t seed) {
    GrayImage img(width, height);
    Rng rng(combine_seeds({seed, 0x67726179}));
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng() & 0xFF);
    return img;
}

ColorImage random_color(int width, int height, std::uint64_t seed) {
    ColorImage img(width, height);
    Rng rng(combine_seeds({seed, 0x726762}));
    for (auto& p : img.interleaved()) p = static_cast<std::uint8_t>(rng() & 0xFF);
    return img;
}

namespace {

// Scene on a 0..1 scale before compression.
std::vector<double> scene(int width, int height, std::uint64_t seed) {
    Rng rng(combine_seeds({seed, 0x7363656e65}));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, 0.02);

    std::vector<double> s(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    const double gx = unit(rng) - 0.5;
    const double gy = unit(rng) - 0.5;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double u = static_cast<double>(x) / std::max(1, width - 1);
            const double v = static_cast<double>(y) / std::max(1, height - 1);
            s[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
              static_cast<std::size_t>(x)] = 0.5 + 0.3 * (gx * u + gy * v);
        }
    }
    for (int k = 0; k < 6; ++k) {
        const double level = unit(rng);
        const bool disc = (k % 2) == 1;
        const double cx = unit(rng) * width;
        const double cy = unit(rng) * height;
        const double rx = (0.1 + 0.25 * unit(rng)) * width;
        const double ry = (0.1 + 0.25 * unit(rng)) * height;
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                const double dx = (x - cx) / rx;
                const double dy = (y - cy) / ry;
                const bool inside =
                    disc ? dx * dx + dy * dy <= 1.0 : std::abs(dx) <= 1.0 && std::abs(dy) <= 1.0;
                if (inside) {
                    s[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)] = level;
                }
            }
        }
    }
    for (auto& value : s) value = std::clamp(value + noise(rng), 0.0, 1.0);
    return s;
}

std::uint8_t compress(double unit_value, std::uint8_t low, std::uint8_t high) {
    const double v = low + unit_value * (high - low);
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), double(low), double(high)));
}

}  // namespace

GrayImage low_contrast_scene(int width, int height, std::uint64_t seed, std::uint8_t low,
                             std::uint8_t high) {
    const std::vector<double> s = scene(width, height, seed);
    GrayImage img(width, height);
    auto px = img.pixels();
    for (std::size_t i = 0; i < s.size(); ++i) px[i] = compress(s[i], low, high);
    return img;
}

ColorImage low_contrast_color_scene(int width, int height, std::uint64_t seed, std::uint8_t low,
                                    std::uint8_t high) {
    const std::vector<double> s = scene(width, height, seed);
    ColorImage img(width, height);
    auto rgb = img.interleaved();
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                                  static_cast<std::size_t>(x);
            // Channel gains vary slowly across the frame; the brightest channel keeps the scene value.
            const double u = static_cast<double>(x) / std::max(1, width - 1);
            const double v = static_cast<double>(y) / std::max(1, height - 1);
            const double gains[3] = {1.0, 0.75 + 0.2 * u, 0.7 + 0.25 * v};
            for (int c = 0; c < 3; ++c) {
                rgb[3 * i + static_cast<std::size_t>(c)] = compress(s[i] * gains[c], low, high);
            }
        }
    }
    return img;
}

}  // namespace fce::synthetic
