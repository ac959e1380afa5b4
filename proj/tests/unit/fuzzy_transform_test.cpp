#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fce/genome.hpp"
#include "fce/image_ops.hpp"
#include "fce/synthetic.hpp"
#include "fce/transfer.hpp"
#include "test_support.hpp"

using namespace fce;

TEST_SUITE("fuzzy_transform") {

TEST_CASE("membership shapes") {
    const auto sl = shoulder_left(0, 127, 0);
    CHECK(sl(0) == 1.0);
    CHECK(sl(127) == 0.0);
    CHECK(sl(64) == doctest::Approx(63.0 / 127.0));
    const auto sr = shoulder_right(127, 255, 255);
    CHECK(sr(255) == 1.0);
    CHECK(sr(100) == 0.0);
    const auto t = triangle(127, 96, 127);
    CHECK(t(127) == 1.0);
    CHECK(t(31) == 0.0);
    CHECK(t(64) == doctest::Approx(0.34375));
    const auto g = gaussian(100, 10, 0);
    CHECK(g(100) == 1.0);
    CHECK(g(110) == doctest::Approx(std::exp(-0.5)));
    const auto s = sigmoid(100, 0.5, 0);
    CHECK(s(100) == doctest::Approx(0.5));
    CHECK(sigmoid(100, -0.5, 0)(200) < 1e-6);
    CHECK(sigmoid_width(-0.08) == doctest::Approx(50.0));
}

TEST_CASE("invariants and repair") {
    CHECK(invariant_violation(triangle(10, 0.1, 0)) != "");
    CHECK(invariant_violation(shoulder_left(50, 40, 0)) != "");
    CHECK(invariant_violation(gaussian(300, 5, 0)) != "");
    CHECK(invariant_violation(triangle(10, 5, 300)) != "");
    CHECK(invariant_violation(sigmoid(10, 0.0, 0)) != "");

    const MembershipFunction broken{Family::shoulder_left, 50, 40, -3};
    const auto fixed = repaired(broken);
    CHECK(invariant_violation(fixed) == "");
    CHECK(repaired(fixed) == fixed);
    for (double at : {0.0, 100.1, 173.3, 254.9, 255.0}) {
        CHECK(invariant_violation(repaired(shoulder_right(at, at, 9))) == "");
    }
    const auto valid = triangle(127, 96, 127);
    CHECK(repaired(valid) == valid);
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::shoulder_left, Family::shoulder_right, Family::triangle,
                     Family::gaussian, Family::sigmoid}) {
        CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK_THROWS_AS(family_from_string("trapezium"), std::invalid_argument);
}

TEST_CASE("default genomes") {
    const Genome tt = default_genome(FamilySet::trapezoid_triangle);
    REQUIRE(tt.size() == 3);
    CHECK(tt[0] == shoulder_left(0, 127, 0));
    CHECK(tt[1] == triangle(127, 96, 127));
    CHECK(tt[2] == shoulder_right(127, 255, 255));

    const Genome ga = default_genome(FamilySet::gaussian_only);
    REQUIRE(ga.size() == 3);
    CHECK(ga[0] == gaussian(0, 50, 0));
    CHECK(ga[1] == gaussian(127, 50, 127));
    CHECK(ga[2] == gaussian(255, 50, 255));

    CHECK(default_genome(FamilySet::gaussian_sigmoid).size() == 3);
}

TEST_CASE("genome construction") {
    CHECK_THROWS_AS(Genome({triangle(1, 2, 3), triangle(4, 5, 6)}), GenomeError);
    CHECK_THROWS_AS(Genome({triangle(1, 2, 3), triangle(4, 5, 6), triangle(7, 0.01, 8)}),
                    GenomeError);
    const Genome g({triangle(200, 5, 1), triangle(10, 5, 2), triangle(100, 5, 3)});
    CHECK(g[0].p1 == 10);
    CHECK(g[1].p1 == 100);
    CHECK(g[2].p1 == 200);
}

TEST_CASE("genome JSON round trip") {
    for (FamilySet set : {FamilySet::trapezoid_triangle, FamilySet::gaussian_only,
                          FamilySet::gaussian_sigmoid}) {
        const Genome g = default_genome(set);
        const std::string text = genome_to_json(g);
        CHECK(genome_from_json(text) == g);
        CHECK(genome_to_json(genome_from_json(text)) == text);
    }
    CHECK_THROWS_AS(genome_from_json("[]"), GenomeError);
    CHECK_THROWS(genome_from_json("{not json"));
}

TEST_CASE("defuzzify examples") {
    SUBCASE("weighted mean") {
        const Genome g({triangle(50, 10, 200), triangle(150, 10, 0), triangle(250, 1, 30)});
        CHECK(defuzzify(g, 50).value == 200.0);
        const Genome two({triangle(0, 10, 0), triangle(10, 10, 255), triangle(250, 1, 30)});
        CHECK(defuzzify(two, 5).value == doctest::Approx(127.5));
    }
    SUBCASE("default trapezoid-triangle at 64") {
        const Defuzzified d = defuzzify(default_genome(FamilySet::trapezoid_triangle), 64);
        CHECK_FALSE(d.fallback);
        CHECK(d.value == doctest::Approx(51.983299150307644).epsilon(1e-12));
    }
    SUBCASE("uncovered input falls back to itself") {
        const Genome g({triangle(10, 1, 0), triangle(20, 1, 0), triangle(30, 1, 0)});
        const Defuzzified d = defuzzify(g, 200);
        CHECK(d.fallback);
        CHECK(d.value == 200.0);
    }
}

TEST_CASE("build_lut") {
    const TransferLut lut = build_lut(default_genome(FamilySet::trapezoid_triangle));
    CHECK(lut.map[0] == 0);
    CHECK(lut.map[255] == 255);
    CHECK(lut.map[64] == 52);
    CHECK(lut.fallback_count == 0);
    CHECK(build_lut(identity_genome()) == identity_lut());

    const Genome sparse({triangle(10, 1, 0), triangle(20, 1, 0), triangle(30, 1, 0)});
    CHECK(build_lut(sparse).fallback_count > 200);
}

TEST_CASE("lut monotone for the default genomes") {
    for (FamilySet set : {FamilySet::trapezoid_triangle, FamilySet::gaussian_only,
                          FamilySet::gaussian_sigmoid}) {
        const TransferLut lut = build_lut(default_genome(set));
        CHECK(std::is_sorted(lut.map.begin(), lut.map.end()));
    }
}

TEST_CASE("apply_lut") {
    const GrayImage img = synthetic::random_gray(3, 3, 8);
    CHECK(apply_lut(img, identity_lut()) == img);

    const TransferLut zero{};
    CHECK(apply_lut(img, zero) == GrayImage(3, 3, 0));

    TransferLut inv;
    for (int z = 0; z < 256; ++z) inv.map[z] = static_cast<std::uint8_t>(255 - z);
    const GrayImage once = apply_lut(img, inv);
    for (std::size_t i = 0; i < img.size(); ++i) CHECK(once.pixels()[i] == 255 - img.pixels()[i]);
    CHECK(apply_lut(once, inv) == img);
}

TEST_CASE("enhance") {
    const GrayImage gray = synthetic::random_gray(12, 9, 2);
    CHECK(std::get<GrayImage>(enhance(Image(gray), identity_genome())) == gray);

    const ColorImage color = synthetic::random_color(12, 9, 3);
    const auto same = std::get<ColorImage>(enhance(Image(color), identity_lut()));
    for (std::size_t i = 0; i < color.interleaved().size(); ++i) {
        CHECK(std::abs(int(same.interleaved()[i]) - int(color.interleaved()[i])) <= 1);
    }
    const auto black = std::get<ColorImage>(enhance(Image(color), TransferLut{}));
    CHECK(black == ColorImage(12, 9));
}

TEST_CASE("lut CSV") {
    const std::string csv = lut_to_csv(identity_lut());
    CHECK(csv.rfind("index,value\n0,0\n1,1\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
}

}
