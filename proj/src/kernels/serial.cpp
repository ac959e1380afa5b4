#include <algorithm>
#include <cmath>

#include "fce/kernels.hpp"

namespace fce {

namespace detail {

std::uint8_t bin_of(double value) {
    const double r = std::floor(value + 0.5);
    if (!(r > 0.0)) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

double sobel_at(const GrayImage& img, int x, int y) {
    const int w = img.width();
    const int h = img.height();
    const int xm = clamp_index(x - 1, w);
    const int xp = clamp_index(x + 1, w);
    const int ym = clamp_index(y - 1, h);
    const int yp = clamp_index(y + 1, h);

    const int tl = img.at(xm, ym), tc = img.at(x, ym), tr = img.at(xp, ym);
    const int ml = img.at(xm, y), mr = img.at(xp, y);
    const int bl = img.at(xm, yp), bc = img.at(x, yp), br = img.at(xp, yp);

    const int gx = (tr + 2 * mr + br) - (tl + 2 * ml + bl);
    const int gy = (bl + 2 * bc + br) - (tl + 2 * tc + tr);
    return std::sqrt(static_cast<double>(gx * gx + gy * gy));
}

void rgb_to_hsv_pixel(Rgb px, float& hue, float& saturation, std::uint8_t& value) {
    const int r = px.r, g = px.g, b = px.b;
    const int mx = std::max({r, g, b});
    const int mn = std::min({r, g, b});
    const int delta = mx - mn;
    value = static_cast<std::uint8_t>(mx);
    if (mx == 0) {
        saturation = 0.0f;
        hue = 0.0f;
        return;
    }
    saturation = static_cast<float>(delta) / static_cast<float>(mx);
    if (delta == 0) {
        hue = 0.0f;
        return;
    }
    const float d = static_cast<float>(delta);
    float h;
    if (mx == r) {
        h = static_cast<float>(g - b) / d;
        if (h < 0.0f) h += 6.0f;
    } else if (mx == g) {
        h = static_cast<float>(b - r) / d + 2.0f;
    } else {
        h = static_cast<float>(r - g) / d + 4.0f;
    }
    hue = h;
}

Rgb hsv_to_rgb_pixel(float hue, float saturation, std::uint8_t value) {
    const double v = value;
    const double s = saturation;
    double h = hue;
    if (h >= 6.0) h -= 6.0;
    if (h < 0.0) h = 0.0;
    const int sector = std::min(static_cast<int>(h), 5);
    const double f = h - sector;
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    double r, g, b;
    switch (sector) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    return {bin_of(r), bin_of(g), bin_of(b)};
}

void check_hsv_planes(const HsvImage& hsv) {
    const std::size_t n = hsv.value.size();
    if (hsv.hue.size() != n || hsv.saturation.size() != n) {
        throw ImageError("HSV planes differ in size: hue " + std::to_string(hsv.hue.size()) +
                         ", saturation " + std::to_string(hsv.saturation.size()) + ", value " +
                         std::to_string(n));
    }
}

}  // namespace detail

namespace serial {

GradientField sobel(const GrayImage& img) {
    GradientField out{img.width(), img.height(), std::vector<double>(img.size())};
    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out.magnitudes[i++] = detail::sobel_at(img, x, y);
        }
    }
    return out;
}

GrayImage apply_lut(const GrayImage& img, const LutTable& lut) {
    GrayImage out(img.width(), img.height());
    const auto in = img.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < in.size(); ++i) {
        dst[i] = lut[in[i]];
    }
    return out;
}

HsvImage rgb_to_hsv(const ColorImage& img) {
    const std::size_t n = img.pixel_count();
    HsvImage out{std::vector<float>(n), std::vector<float>(n), GrayImage(img.width(), img.height())};
    const auto rgb = img.interleaved();
    auto value = out.value.pixels();
    for (std::size_t i = 0; i < n; ++i) {
        detail::rgb_to_hsv_pixel({rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]}, out.hue[i],
                                 out.saturation[i], value[i]);
    }
    return out;
}

ColorImage hsv_to_rgb(const HsvImage& hsv) {
    detail::check_hsv_planes(hsv);
    ColorImage out(hsv.width(), hsv.height());
    auto rgb = out.interleaved();
    const auto value = hsv.value.pixels();
    for (std::size_t i = 0; i < value.size(); ++i) {
        const Rgb px = detail::hsv_to_rgb_pixel(hsv.hue[i], hsv.saturation[i], value[i]);
        rgb[3 * i] = px.r;
        rgb[3 * i + 1] = px.g;
        rgb[3 * i + 2] = px.b;
    }
    return out;
}

Histogram histogram(std::span<const std::uint8_t> pixels) {
    Histogram h{};
    for (const std::uint8_t p : pixels) ++h[p];
    return h;
}

Histogram binned_histogram(std::span<const double> values) {
    Histogram h{};
    for (const double v : values) ++h[detail::bin_of(v)];
    return h;
}

}  // namespace serial

}  // namespace fce
