#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fce/commands.hpp"
#include "fce/image_io.hpp"
#include "fce/image_ops.hpp"
#include "fce/synthetic.hpp"
#include "fce/trace_io.hpp"
#include "test_support.hpp"

using namespace fce;
using fce::test::scratch_dir;
using fce::test::slurp;
namespace fs = std::filesystem;

TEST_SUITE("experiment_config") {

TEST_CASE("defaults") {
    const ExperimentConfig cfg = parse_experiment_config("variants = [\"HC-simple\"]\n");
    CHECK(cfg.num_of_test == 5);
    CHECK(cfg.per_run_time == 120.0);
    CHECK(cfg.hp.change_prob == 0.5);
    CHECK(cfg.hp.mutate_mu == 3.0);
    CHECK(cfg.hp.mutate_sigma == 2.0);
    CHECK(cfg.hp.membership_split_prob == 0.1);
    CHECK(cfg.hp.pop_size == 30);
    CHECK_FALSE(cfg.hp.max_generations.has_value());
}

TEST_CASE("keys and path resolution") {
    const ExperimentConfig cfg = parse_experiment_config(
        "images = [\"a.png\", \"/abs/b.pgm\"]\n"
        "variants = [\"GA-plus\", \"HC-split-gauss\"]\n"
        "num-of-test = 2\n"
        "max_generations = 3\n"
        "pop_size = 8\n"
        "entropy_source = \"enhanced\"\n"
        "seed = 42\n"
        "output_dir = \"out\"\n",
        "/base");
    REQUIRE(cfg.images.size() == 2);
    CHECK(cfg.images[0] == fs::path("/base/a.png"));
    CHECK(cfg.images[1] == fs::path("/abs/b.pgm"));
    CHECK(cfg.variants == std::vector<VariantId>{VariantId::ga_plus, VariantId::hc_split_gauss});
    CHECK(cfg.num_of_test == 2);
    CHECK(*cfg.hp.max_generations == 3);
    CHECK(cfg.hp.pop_size == 8);
    CHECK(cfg.hp.entropy_source == EntropySource::enhanced);
    CHECK(cfg.hp.seed == 42);
    CHECK(cfg.output_dir == fs::path("/base/out"));
    CHECK_FALSE(cfg.run_params(1).time_budget_s.has_value());
}

TEST_CASE("errors") {
    CHECK_THROWS_WITH(parse_experiment_config("images = [\"a.png\"]\nvariants = []\n").validate(),
                      doctest::Contains("nothing to benchmark"));
    CHECK_THROWS(parse_experiment_config("bogus_key = 1\n"));
    CHECK_THROWS(parse_experiment_config("variants = [\"HC-nope\"]\n"));
    CHECK_THROWS(parse_experiment_config("num_of_test = -1\nvariants=[\"GA-plus\"]\n").validate());
}

TEST_CASE("run seeds differ per cell") {
    const auto a = run_seed(1, "x.png", VariantId::hc_simple, 0);
    CHECK(a == run_seed(1, "x.png", VariantId::hc_simple, 0));
    CHECK(a != run_seed(1, "x.png", VariantId::hc_simple, 1));
    CHECK(a != run_seed(1, "y.png", VariantId::hc_simple, 0));
    CHECK(a != run_seed(1, "x.png", VariantId::ga_plus, 0));
    CHECK(a != run_seed(2, "x.png", VariantId::hc_simple, 0));
}

TEST_CASE("ranking and selection") {
    std::vector<CellResult> cells(3);
    cells[0].variant = VariantId::hc_simple;
    cells[0].runs = {{0, 0, true, "", {}, {}, 0.1, 0, 1}, {1, 0, true, "", {}, {}, 0.3, 0, 1}};
    cells[1].variant = VariantId::ga_plus;
    cells[1].runs = {{0, 0, true, "", {}, {}, 0.05, 0, 1}};
    cells[2].variant = VariantId::hc_split_gauss;
    cells[2].runs = {{0, 0, true, "", {}, {}, 0.5, 0, 1}};
    const std::vector<VariantId> variants{VariantId::hc_simple, VariantId::ga_plus,
                                          VariantId::hc_split_gauss, VariantId::ga_comma};
    const auto ranking = rank_variants(variants, cells);
    REQUIRE(ranking.size() == 4);
    CHECK(ranking[0].variant == VariantId::hc_split_gauss);
    CHECK(ranking[1].variant == VariantId::hc_simple);
    CHECK(*ranking[1].mean_improvement_rate == doctest::Approx(0.2));
    CHECK(ranking[2].variant == VariantId::ga_plus);
    CHECK(ranking[3].variant == VariantId::ga_comma);
    CHECK_FALSE(ranking[3].mean_improvement_rate.has_value());
    CHECK(select_variants(ranking) ==
          std::vector<VariantId>{VariantId::hc_split_gauss, VariantId::ga_plus});
}

}

TEST_SUITE("cli") {

TEST_CASE("enhance with no generations applies the start genome") {
    const auto dir = scratch_dir("enhance0");
    const GrayImage img = synthetic::low_contrast_scene(24, 24, 2);
    save_image(img, dir / "in.pgm");

    cli::EnhanceArgs args;
    args.input = dir / "in.pgm";
    args.output = dir / "out.pgm";
    args.hp.max_generations = 0;
    std::ostringstream out, err;
    REQUIRE(cli::cmd_enhance(args, out, err) == 0);
    const auto expected = apply_lut(img, build_lut(default_genome(FamilySet::trapezoid_triangle)));
    CHECK(std::get<GrayImage>(load_image(dir / "out.pgm")) == expected);
    CHECK(fs::exists(dir / "out.genome.json"));
    CHECK(fs::exists(dir / "out.lut.csv"));
    CHECK(fs::exists(dir / "out.trace.csv"));

    const auto summary = nlohmann::json::parse(out.str());
    CHECK(summary["generations"] == 0);
    CHECK(summary["improvement_rate"].is_null());
}

TEST_CASE("enhance twice gives identical files") {
    const auto dir = scratch_dir("enhance_det");
    save_image(synthetic::low_contrast_color_scene(20, 16, 6), dir / "in.png");
    std::string genome[2], trace[2];
    for (int k = 0; k < 2; ++k) {
        cli::EnhanceArgs args;
        args.input = dir / "in.png";
        args.output = dir / ("out" + std::to_string(k) + ".png");
        args.variant = VariantId::ga_comma;
        args.hp.max_generations = 3;
        args.hp.pop_size = 6;
        args.hp.seed = 17;
        std::ostringstream out, err;
        REQUIRE(cli::cmd_enhance(args, out, err) == 0);
        genome[k] = slurp(dir / ("out" + std::to_string(k) + ".genome.json"));
        trace[k] = slurp(dir / ("out" + std::to_string(k) + ".trace.csv"));
    }
    CHECK(genome[0] == genome[1]);
    CHECK(trace[0] == trace[1]);
    CHECK(trace[0].find(",,") != std::string::npos);
}

TEST_CASE("enhance reports a missing input and writes nothing") {
    const auto dir = scratch_dir("enhance_missing");
    cli::EnhanceArgs args;
    args.input = dir / "absent.png";
    args.output = dir / "out.png";
    args.hp.max_generations = 1;
    std::ostringstream out, err;
    CHECK(cli::cmd_enhance(args, out, err) != 0);
    CHECK(err.str().find("file not found") != std::string::npos);
    CHECK(fs::is_empty(dir));
}

TEST_CASE("enhance on a constant image warns but succeeds") {
    const auto dir = scratch_dir("enhance_flat");
    save_image(GrayImage(16, 16, 80), dir / "flat.pgm");
    cli::EnhanceArgs args;
    args.input = dir / "flat.pgm";
    args.output = dir / "out.pgm";
    args.hp.max_generations = 2;
    std::ostringstream out, err;
    CHECK(cli::cmd_enhance(args, out, err) == 0);
    CHECK(err.str().find("degenerate") != std::string::npos);
    CHECK(fs::exists(dir / "out.pgm"));
    const auto summary = nlohmann::json::parse(out.str());
    CHECK(summary["result"]["F"].is_null());
    CHECK(summary["delta_F"].is_null());
}

TEST_CASE("baseline") {
    const auto dir = scratch_dir("baseline");
    SUBCASE("constant image") {
        save_image(GrayImage(8, 8, 33), dir / "flat.pgm");
        cli::BaselineArgs args;
        args.input = dir / "flat.pgm";
        args.output = dir / "he.pgm";
        std::ostringstream out, err;
        REQUIRE(cli::cmd_baseline(args, out, err) == 0);
        const auto he = std::get<GrayImage>(load_image(dir / "he.pgm"));
        const auto first = he.pixels()[0];
        CHECK(std::all_of(he.pixels().begin(), he.pixels().end(),
                          [&](std::uint8_t p) { return p == first; }));
        const auto summary = nlohmann::json::parse(out.str());
        CHECK(summary["result"]["degenerate"] == true);
    }
    SUBCASE("two-level image") {
        save_image(fce::test::vertical_step(4, 4, 2, 50, 60), dir / "two.pgm");
        cli::BaselineArgs args;
        args.input = dir / "two.pgm";
        args.output = dir / "he.pgm";
        std::ostringstream out, err;
        REQUIRE(cli::cmd_baseline(args, out, err) == 0);
        CHECK(std::get<GrayImage>(load_image(dir / "he.pgm")) ==
              fce::test::vertical_step(4, 4, 2, 127, 255));
    }
    SUBCASE("color image keeps hue and saturation") {
        const ColorImage c = synthetic::low_contrast_color_scene(16, 16, 9);
        save_image(c, dir / "c.png");
        cli::BaselineArgs args;
        args.input = dir / "c.png";
        args.output = dir / "he.png";
        std::ostringstream out, err;
        REQUIRE(cli::cmd_baseline(args, out, err) == 0);
        const HsvImage before = rgb_to_hsv(c);
        const HsvImage after = rgb_to_hsv(std::get<ColorImage>(load_image(dir / "he.png")));
        for (std::size_t i = 0; i < before.hue.size(); ++i) {
            if (before.saturation[i] == 0.0f || after.value.pixels()[i] < 32) continue;
            // Quantization to 8 bits bounds the drift by about one level over V.
            const float tol = 2.0f / after.value.pixels()[i];
            CHECK(std::abs(before.saturation[i] - after.saturation[i]) <= tol + 1e-6f);
        }
    }
}

TEST_CASE("benchmark aggregates match the traces") {
    const auto dir = scratch_dir("bench");
    save_image(synthetic::low_contrast_scene(16, 16, 1), dir / "img.pgm");
    fce::test::spit(dir / "bench.toml",
                    "images = [\"img.pgm\"]\n"
                    "variants = [\"HC-simple\"]\n"
                    "num_of_test = 2\n"
                    "max_generations = 3\n"
                    "seed = 5\n"
                    "output_dir = \"out\"\n");
    cli::BenchmarkArgs args;
    args.config = dir / "bench.toml";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_benchmark(args, out, err) == 0);

    const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
    CHECK(report["config"]["num_of_test"] == 2);
    CHECK(report["config"]["change_prob"] == 0.5);
    const auto& cell = report["images"][0]["variants"][0];
    double sum = 0.0;
    for (const auto& run : cell["runs"]) {
        const auto recs = read_trace_file(dir / "out" / "traces" / run["trace"].get<std::string>());
        const double rate = improvement_rate(recs);
        CHECK(rate == run["improvement_rate"].get<double>());
        sum += rate;
    }
    CHECK(std::abs(cell["mean_improvement_rate"].get<double>() - sum / 2.0) <= 1e-12);
    CHECK(out.str().find("HC-simple") != std::string::npos);
}

TEST_CASE("benchmark with no variants fails") {
    const auto dir = scratch_dir("bench_empty");
    fce::test::spit(dir / "bench.toml", "images = [\"img.pgm\"]\nvariants = []\n");
    cli::BenchmarkArgs args;
    args.config = dir / "bench.toml";
    std::ostringstream out, err;
    CHECK(cli::cmd_benchmark(args, out, err) != 0);
    CHECK(err.str().find("nothing to benchmark") != std::string::npos);
}

TEST_CASE("fitness command") {
    const auto dir = scratch_dir("fitness");
    const GrayImage img = synthetic::random_gray(16, 16, 3);
    save_image(img, dir / "r.pgm");
    cli::FitnessArgs args;
    args.input = dir / "r.pgm";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_fitness(args, out, err) == 0);
    CHECK(fitness_report_from_json(out.str()) == evaluate(img));
}

}
