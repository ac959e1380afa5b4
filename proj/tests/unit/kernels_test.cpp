#include <doctest.h>

#include <omp.h>

#include "fce/image_ops.hpp"
#include "fce/synthetic.hpp"

using namespace fce;

// Sizes straddle the threshold below which the parallel kernels stay serial.
TEST_SUITE("kernels") {

TEST_CASE("serial and parallel kernels are bit-identical") {
    omp_set_num_threads(4);
    for (auto [w, h] : {std::pair{1, 1}, {3, 7}, {128, 128}, {300, 97}}) {
        const GrayImage g = synthetic::random_gray(w, h, 31);
        const ColorImage c = synthetic::random_color(w, h, 32);
        CHECK(serial::sobel(g).magnitudes == parallel::sobel(g).magnitudes);

        LutTable lut{};
        for (int z = 0; z < 256; ++z) lut[z] = static_cast<std::uint8_t>((z * 7) & 0xFF);
        CHECK(serial::apply_lut(g, lut) == parallel::apply_lut(g, lut));
        CHECK(serial::histogram(g.pixels()) == parallel::histogram(g.pixels()));

        const GradientField f = serial::sobel(g);
        CHECK(serial::binned_histogram(f.magnitudes) == parallel::binned_histogram(f.magnitudes));

        const HsvImage a = serial::rgb_to_hsv(c);
        const HsvImage b = parallel::rgb_to_hsv(c);
        CHECK(a.hue == b.hue);
        CHECK(a.saturation == b.saturation);
        CHECK(a.value == b.value);
        CHECK(serial::hsv_to_rgb(a) == parallel::hsv_to_rgb(a));
    }
}

TEST_CASE("unmodified HSV recombines exactly") {
    const ColorImage c = synthetic::random_color(64, 64, 8);
    CHECK(hsv_to_rgb(rgb_to_hsv(c)) == c);
}

}
