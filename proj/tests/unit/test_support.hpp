#pragma once

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "fce/image.hpp"

namespace fce::test {

inline std::filesystem::path data_dir() { return FCE_TEST_DATA_DIR; }

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("fce_unit_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void spit(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
}

inline GrayImage vertical_step(int w, int h, int split, std::uint8_t lo, std::uint8_t hi) {
    GrayImage img(w, h, lo);
    for (int y = 0; y < h; ++y)
        for (int x = split; x < w; ++x) img.at(x, y) = hi;
    return img;
}

}  // namespace fce::test
