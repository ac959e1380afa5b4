#include "fce/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

namespace fce {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const fs::path& path, const std::string& what) {
    throw IoError(path.string() + ": " + what);
}

std::string lower_extension(const fs::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const fs::path& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) {
        fail(path, "cannot open file");
    }
    return f;
}

// ---------------------------------------------------------------------------
// PNM

class PnmHeaderReader {
public:
    PnmHeaderReader(const std::string& data, const fs::path& path) : data_(data), path_(path) {}

    int next_int() {
        skip_space_and_comments();
        if (pos_ >= data_.size() || !std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            fail(path_, "corrupt header");
        }
        long value = 0;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            value = value * 10 + (data_[pos_] - '0');
            if (value > 1'000'000'000L) {
                fail(path_, "corrupt header");
            }
            ++pos_;
        }
        return static_cast<int>(value);
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
            fail(path_, "corrupt header");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            const char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& data_;
    const fs::path& path_;
    std::size_t pos_ = 2;
};

Image load_pnm(const fs::path& path, const std::string& data) {
    const bool gray = data[1] == '5';
    PnmHeaderReader header(data, path);
    const int width = header.next_int();
    const int height = header.next_int();
    const int maxval = header.next_int();
    if (width < 1 || height < 1) {
        fail(path, "corrupt header");
    }
    if (maxval != 255) {
        fail(path, "unsupported format (maxval " + std::to_string(maxval) + ", expected 255)");
    }
    const std::size_t offset = header.raster_offset();
    const std::size_t channels = gray ? 1 : 3;
    const std::size_t need =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
    if (data.size() < offset + need) {
        fail(path, "truncated raster");
    }
    std::vector<std::uint8_t> raster(data.begin() + static_cast<std::ptrdiff_t>(offset),
                                     data.begin() + static_cast<std::ptrdiff_t>(offset + need));
    if (gray) {
        return GrayImage(width, height, std::move(raster));
    }
    return ColorImage(width, height, std::move(raster));
}

void save_pnm(const fs::path& path, bool gray, int width, int height,
              std::span<const std::uint8_t> raster) {
    auto f = open_file(path, "wb");
    const std::string header = std::string(gray ? "P5" : "P6") + "\n" + std::to_string(width) +
                               " " + std::to_string(height) + "\n255\n";
    if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size() ||
        std::fwrite(raster.data(), 1, raster.size(), f.get()) != raster.size()) {
        fail(path, "write failed");
    }
}

// ---------------------------------------------------------------------------
// PNG

Image load_png(const fs::path& path) {
    auto f = open_file(path, "rb");
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) {
        fail(path, "libpng initialisation failed");
    }
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "libpng initialisation failed");
    }

    std::vector<std::uint8_t> raster;
    std::vector<png_bytep> rows;
    int width = 0;
    int height = 0;
    bool gray = false;

    // libpng reports errors by longjmp; nothing with a destructor may be
    // constructed between here and the end of the decode.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "corrupt PNG data");
    }
    png_init_io(png, f.get());
    png_read_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    gray = channels == 1;
    const std::size_t stride = png_get_rowbytes(png, info);
    raster.resize(stride * static_cast<std::size_t>(height));
    rows.resize(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        rows[static_cast<std::size_t>(y)] = raster.data() + stride * static_cast<std::size_t>(y);
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (gray) {
        return GrayImage(width, height, std::move(raster));
    }
    return ColorImage(width, height, std::move(raster));
}

void save_png(const fs::path& path, bool gray, int width, int height,
              std::span<const std::uint8_t> raster) {
    auto f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) {
        fail(path, "libpng initialisation failed");
    }
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "libpng initialisation failed");
    }
    const std::size_t stride = static_cast<std::size_t>(width) * (gray ? 1 : 3);
    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        rows[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(raster.data() + stride * static_cast<std::size_t>(y));
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG encode failed");
    }
    png_init_io(png, f.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 gray ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::vector<std::uint8_t> gray_to_rgb(const GrayImage& img) {
    std::vector<std::uint8_t> out(img.size() * 3);
    const auto px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        out[3 * i] = out[3 * i + 1] = out[3 * i + 2] = px[i];
    }
    return out;
}

}  // namespace

Image load_image(const fs::path& path) {
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        fail(path, "file not found");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(path, "cannot open file");
    }
    std::array<unsigned char, 8> magic{};
    in.read(reinterpret_cast<char*>(magic.data()), magic.size());
    const auto got = static_cast<std::size_t>(in.gcount());

    if (got == 8 && png_sig_cmp(magic.data(), 0, 8) == 0) {
        in.close();
        return load_png(path);
    }
    if (got >= 2 && magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
        in.seekg(0);
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return load_pnm(path, data);
    }
    fail(path, "unsupported format");
}

void save_image(const Image& img, const fs::path& path) {
    const std::string ext = lower_extension(path);
    const bool is_gray = std::holds_alternative<GrayImage>(img);
    const int width = width_of(img);
    const int height = height_of(img);

    if (ext == ".pgm") {
        if (!is_gray) {
            fail(path, "cannot write a color image as PGM");
        }
        save_pnm(path, true, width, height, std::get<GrayImage>(img).pixels());
    } else if (ext == ".ppm") {
        if (is_gray) {
            const auto rgb = gray_to_rgb(std::get<GrayImage>(img));
            save_pnm(path, false, width, height, rgb);
        } else {
            save_pnm(path, false, width, height, std::get<ColorImage>(img).interleaved());
        }
    } else if (ext == ".png") {
        if (is_gray) {
            save_png(path, true, width, height, std::get<GrayImage>(img).pixels());
        } else {
            save_png(path, false, width, height, std::get<ColorImage>(img).interleaved());
        }
    } else {
        fail(path, "unsupported output format '" + ext + "'");
    }
}

}  // namespace fce
