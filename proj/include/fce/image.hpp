#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fce {

/// Raised for any violation of an image type's invariants.
class ImageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Single-channel 8-bit raster, row-major. Width and height are always >= 1.
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
    std::uint8_t& at(int x, int y) { return pixels_[index(x, y)]; }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// Interleaved 8-bit RGB raster, row-major.
class ColorImage {
public:
    ColorImage(int width, int height, Rgb fill = {});
    /// `interleaved` holds width*height*3 bytes in R,G,B order.
    ColorImage(int width, int height, std::vector<std::uint8_t> interleaved);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return data_.size() / 3; }

    Rgb at(int x, int y) const;
    void set(int x, int y, Rgb value);

    std::span<const std::uint8_t> interleaved() const noexcept { return data_; }
    std::span<std::uint8_t> interleaved() noexcept { return data_; }

    bool operator==(const ColorImage&) const = default;

private:
    std::size_t index(int x, int y) const {
        return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(x)) * 3;
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// Sobel gradient magnitudes; same dimensions as the source image, all >= 0.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> magnitudes;

    double at(int x, int y) const {
        return magnitudes[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                          static_cast<std::size_t>(x)];
    }
};

/// HSV decomposition. Hue is in sextant units [0,6), saturation in [0,1];
/// both kept as float so that unmodified pixels recombine exactly.
struct HsvImage {
    std::vector<float> hue;
    std::vector<float> saturation;
    GrayImage value;

    int width() const noexcept { return value.width(); }
    int height() const noexcept { return value.height(); }
};

using Image = std::variant<GrayImage, ColorImage>;

inline int width_of(const Image& img) {
    return std::visit([](const auto& i) { return i.width(); }, img);
}
inline int height_of(const Image& img) {
    return std::visit([](const auto& i) { return i.height(); }, img);
}

}  // namespace fce
