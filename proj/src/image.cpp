#include "fce/image.hpp"

namespace fce {

namespace {

std::size_t checked_area(int width, int height) {
    if (width < 1 || height < 1) {
        throw ImageError("image dimensions must be at least 1x1, got " + std::to_string(width) +
                         "x" + std::to_string(height));
    }
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(checked_area(width, height), fill) {}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (pixels_.size() != checked_area(width, height)) {
        throw ImageError("pixel count " + std::to_string(pixels_.size()) +
                         " does not match " + std::to_string(width) + "x" +
                         std::to_string(height));
    }
}

ColorImage::ColorImage(int width, int height, Rgb fill)
    : width_(width), height_(height), data_(checked_area(width, height) * 3) {
    for (std::size_t i = 0; i < data_.size(); i += 3) {
        data_[i] = fill.r;
        data_[i + 1] = fill.g;
        data_[i + 2] = fill.b;
    }
}

ColorImage::ColorImage(int width, int height, std::vector<std::uint8_t> interleaved)
    : width_(width), height_(height), data_(std::move(interleaved)) {
    if (data_.size() != checked_area(width, height) * 3) {
        throw ImageError("RGB buffer of " + std::to_string(data_.size()) +
                         " bytes does not match " + std::to_string(width) + "x" +
                         std::to_string(height) + "x3");
    }
}

Rgb ColorImage::at(int x, int y) const {
    const std::size_t i = index(x, y);
    return {data_[i], data_[i + 1], data_[i + 2]};
}

void ColorImage::set(int x, int y, Rgb value) {
    const std::size_t i = index(x, y);
    data_[i] = value.r;
    data_[i + 1] = value.g;
    data_[i + 2] = value.b;
}

}  // namespace fce
