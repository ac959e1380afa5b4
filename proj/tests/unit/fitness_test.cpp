#include <doctest.h>

#include <cmath>
#include <limits>

#include "fce/fitness.hpp"
#include "fce/image_ops.hpp"
#include "fce/synthetic.hpp"
#include "test_support.hpp"

using namespace fce;

namespace {

GrayImage checkerboard(int n) {
    GrayImage img(n, n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) img.at(x, y) = ((x + y) % 2) ? 255 : 0;
    return img;
}

GrayImage transposed(const GrayImage& img) {
    GrayImage out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) out.at(y, x) = img.at(x, y);
    return out;
}

}  // namespace

TEST_SUITE("fitness") {

TEST_CASE("constant image is degenerate") {
    const FitnessReport r = evaluate(GrayImage(10, 10, 128));
    CHECK(r.degenerate);
    CHECK(r.E == 0.0);
    CHECK(r.ne == 0);
    CHECK(r.H == 0.0);
    CHECK(r.F == -std::numeric_limits<double>::infinity());
    CHECK_FALSE(std::isnan(r.F));
}

TEST_CASE("8x8 checkerboard") {
    // Replicate padding cancels both kernels everywhere except at the corners.
    const FitnessReport r = evaluate(checkerboard(8));
    CHECK(r.ne == 4);
    CHECK(r.E == doctest::Approx(2884.995667241114).epsilon(1e-12));
    CHECK(r.H == doctest::Approx(0.3372900666170139).epsilon(1e-12));
    CHECK(r.F == doctest::Approx(0.04374953593228822).epsilon(1e-12));
    CHECK(r.M == 8);
    CHECK(r.N == 8);
}

TEST_CASE("step edges") {
    const FitnessReport lo = evaluate(fce::test::vertical_step(8, 8, 4, 0, 128));
    CHECK(lo.ne == 16);
    CHECK(lo.E == 8192.0);
    CHECK(lo.F == doctest::Approx(0.4458858473136304).epsilon(1e-12));
    const FitnessReport hi = evaluate(fce::test::vertical_step(8, 8, 4, 0, 255));
    CHECK(hi.E == 16320.0);
    CHECK(hi.F == doctest::Approx(0.4608345725990043).epsilon(1e-12));
    CHECK(hi.H == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(hi.F > lo.F);
}

TEST_CASE("edge threshold is strict") {
    FitnessOptions opts;
    opts.edge_threshold = 1020.0;
    CHECK(evaluate(fce::test::vertical_step(4, 4, 2, 0, 255), opts).ne == 0);
    opts.edge_threshold = 1019.0;
    CHECK(evaluate(fce::test::vertical_step(4, 4, 2, 0, 255), opts).ne == 8);
}

TEST_CASE("evaluate is invariant under transposition and deterministic") {
    const GrayImage img = synthetic::random_gray(13, 9, 21);
    const FitnessReport a = evaluate(img);
    const FitnessReport b = evaluate(transposed(img));
    CHECK(a.ne == b.ne);
    CHECK(a.H == doctest::Approx(b.H).epsilon(1e-12));
    CHECK(a.E == doctest::Approx(b.E).epsilon(1e-12));
    CHECK(evaluate(img) == a);
    CHECK(evaluate(img, {}, Exec::serial) == a);
}

TEST_CASE("entropy source switch") {
    const GrayImage img = synthetic::low_contrast_scene(32, 32, 3);
    FitnessOptions opts;
    opts.entropy_source = EntropySource::enhanced;
    const FitnessReport r = evaluate(img, opts);
    CHECK(r.H == doctest::Approx(entropy(img)));
    CHECK(entropy_source_from_string("enhanced") == EntropySource::enhanced);
    CHECK_THROWS(entropy_source_from_string("lab"));
}

TEST_CASE("fitness_of_genome") {
    const GrayImage img = synthetic::random_gray(16, 16, 99);
    CHECK(fitness_of_genome(img, identity_genome()) == evaluate(img));

    const Genome black({triangle(0, 255, 0), triangle(127, 255, 0), triangle(255, 255, 0)});
    CHECK(fitness_of_genome(img, black).degenerate);

    const Genome g = default_genome(FamilySet::trapezoid_triangle);
    CHECK(fitness_of_genome(img, g) == evaluate(apply_lut(img, build_lut(g))));

    const ColorImage color = synthetic::random_color(16, 16, 5);
    CHECK(fitness_of_genome(Image(color), g) ==
          fitness_of_genome(intensity_plane(Image(color)), g));
}

TEST_CASE("report JSON round trip") {
    const FitnessReport r = evaluate(synthetic::random_gray(16, 16, 4));
    CHECK(fitness_report_from_json(to_json(r)) == r);

    const FitnessReport d = evaluate(GrayImage(4, 4, 9));
    const std::string text = to_json(d);
    CHECK(text.find("\"F\":null") != std::string::npos);
    CHECK(fitness_report_from_json(text) == d);
}

TEST_CASE("fitness delta") {
    FitnessReport a;
    a.F = 1.0;
    FitnessReport b;
    b.F = 3.5;
    CHECK(*fitness_delta(a, b) == 2.5);
    b.degenerate = true;
    CHECK_FALSE(fitness_delta(a, b).has_value());
}

}
