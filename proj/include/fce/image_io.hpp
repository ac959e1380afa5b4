#pragma once

#include <filesystem>
#include <stdexcept>

#include "fce/image.hpp"

namespace fce {

/// I/O failure. The message always names the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads PNG or binary PGM/PPM (maxval 255). Single-channel sources load as
/// GrayImage, everything else as ColorImage. Alpha is discarded and 16-bit
/// PNG samples are reduced to 8 bits.
Image load_image(const std::filesystem::path& path);

/// Format chosen by extension: .png, .pgm, .ppm. A GrayImage written to .ppm
/// is replicated across channels; a ColorImage cannot be written to .pgm.
void save_image(const Image& img, const std::filesystem::path& path);

}  // namespace fce
