#include <omp.h>

#include <cmath>

#include "fce/kernels.hpp"

namespace fce::parallel {

namespace {

// Below this many pixels the fork/join cost dominates.
constexpr std::size_t kMinParallelPixels = 16 * 1024;

bool worth_parallel(std::size_t n) { return n >= kMinParallelPixels && !omp_in_parallel(); }

}  // namespace

GradientField sobel(const GrayImage& img) {
    const int w = img.width();
    const int h = img.height();
    GradientField out{w, h, std::vector<double>(img.size())};
    const std::uint8_t* src = img.pixels().data();
    double* dst = out.magnitudes.data();
    const std::size_t stride = static_cast<std::size_t>(w);

#pragma omp parallel for schedule(static) if (worth_parallel(img.size()))
    for (int y = 0; y < h; ++y) {
        double* row = dst + static_cast<std::size_t>(y) * stride;
        if (y == 0 || y == h - 1 || w < 3) {
            for (int x = 0; x < w; ++x) row[x] = detail::sobel_at(img, x, y);
            continue;
        }
        const std::uint8_t* up = src + static_cast<std::size_t>(y - 1) * stride;
        const std::uint8_t* mid = up + stride;
        const std::uint8_t* dn = mid + stride;
        row[0] = detail::sobel_at(img, 0, y);
        for (int x = 1; x < w - 1; ++x) {
            const int gx = (up[x + 1] + 2 * mid[x + 1] + dn[x + 1]) -
                           (up[x - 1] + 2 * mid[x - 1] + dn[x - 1]);
            const int gy = (dn[x - 1] + 2 * dn[x] + dn[x + 1]) -
                           (up[x - 1] + 2 * up[x] + up[x + 1]);
            row[x] = std::sqrt(static_cast<double>(gx * gx + gy * gy));
        }
        row[w - 1] = detail::sobel_at(img, w - 1, y);
    }
    return out;
}

GrayImage apply_lut(const GrayImage& img, const LutTable& lut) {
    GrayImage out(img.width(), img.height());
    const std::uint8_t* in = img.pixels().data();
    std::uint8_t* dst = out.pixels().data();
    const auto n = static_cast<std::ptrdiff_t>(img.size());

#pragma omp parallel for schedule(static) if (worth_parallel(img.size()))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        dst[i] = lut[in[i]];
    }
    return out;
}

HsvImage rgb_to_hsv(const ColorImage& img) {
    const std::size_t n = img.pixel_count();
    HsvImage out{std::vector<float>(n), std::vector<float>(n), GrayImage(img.width(), img.height())};
    const std::uint8_t* rgb = img.interleaved().data();
    std::uint8_t* value = out.value.pixels().data();
    float* hue = out.hue.data();
    float* sat = out.saturation.data();
    const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(static) if (worth_parallel(n))
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        detail::rgb_to_hsv_pixel({rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]}, hue[i], sat[i],
                                 value[i]);
    }
    return out;
}

ColorImage hsv_to_rgb(const HsvImage& hsv) {
    detail::check_hsv_planes(hsv);
    ColorImage out(hsv.width(), hsv.height());
    std::uint8_t* rgb = out.interleaved().data();
    const std::uint8_t* value = hsv.value.pixels().data();
    const auto count = static_cast<std::ptrdiff_t>(hsv.value.size());

#pragma omp parallel for schedule(static) if (worth_parallel(hsv.value.size()))
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const Rgb px = detail::hsv_to_rgb_pixel(hsv.hue[static_cast<std::size_t>(i)],
                                                hsv.saturation[static_cast<std::size_t>(i)],
                                                value[i]);
        rgb[3 * i] = px.r;
        rgb[3 * i + 1] = px.g;
        rgb[3 * i + 2] = px.b;
    }
    return out;
}

namespace {

template <typename T, typename BinFn>
Histogram reduce_histogram(std::span<const T> values, BinFn bin) {
    Histogram total{};
    const auto n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel if (worth_parallel(values.size()))
    {
        Histogram local{};
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            ++local[bin(values[static_cast<std::size_t>(i)])];
        }
#pragma omp critical(fce_histogram_merge)
        for (std::size_t b = 0; b < total.size(); ++b) total[b] += local[b];
    }
    return total;
}

}  // namespace

Histogram histogram(std::span<const std::uint8_t> pixels) {
    return reduce_histogram(pixels, [](std::uint8_t p) { return p; });
}

Histogram binned_histogram(std::span<const double> values) {
    return reduce_histogram(values, [](double v) { return detail::bin_of(v); });
}

}  // namespace fce::parallel
