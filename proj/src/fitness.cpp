#include "fce/fitness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "fce/image_ops.hpp"

namespace fce {

using nlohmann::json;

std::string_view to_string(EntropySource src) {
    return src == EntropySource::sobel ? "sobel" : "enhanced";
}

EntropySource entropy_source_from_string(std::string_view name) {
    if (name == "sobel") return EntropySource::sobel;
    if (name == "enhanced") return EntropySource::enhanced;
    throw std::invalid_argument("entropy source must be 'sobel' or 'enhanced', got '" +
                                std::string(name) + "'");
}

FitnessReport evaluate(const GrayImage& img, const FitnessOptions& opts, Exec exec) {
    const GradientField field = sobel(img, exec);

    FitnessReport r;
    r.M = img.width();
    r.N = img.height();
    // Serial in-order sum so the result does not depend on the thread count.
    for (const double m : field.magnitudes) {
        r.E += m;
        if (m > opts.edge_threshold) ++r.ne;
    }
    r.H = opts.entropy_source == EntropySource::sobel ? entropy(field, exec) : entropy(img, exec);

    if (r.E <= std::numbers::e) {
        r.F = -std::numeric_limits<double>::infinity();
        r.degenerate = true;
    } else {
        r.F = std::log(std::log(r.E)) * r.edge_fraction() * r.H;
    }
    return r;
}

FitnessReport fitness_of_genome(const GrayImage& plane, const Genome& g,
                                const FitnessOptions& opts, Exec exec) {
    return evaluate(apply_lut(plane, build_lut(g), exec), opts, exec);
}

FitnessReport fitness_of_genome(const Image& img, const Genome& g, const FitnessOptions& opts,
                                Exec exec) {
    return fitness_of_genome(intensity_plane(img, exec), g, opts, exec);
}

FitnessReport evaluate_image(const Image& img, const FitnessOptions& opts, Exec exec) {
    return evaluate(intensity_plane(img, exec), opts, exec);
}

std::string to_json(const FitnessReport& report) {
    json doc = {{"F", report.degenerate ? json(nullptr) : json(report.F)},
                {"E", report.E},
                {"ne", report.ne},
                {"H", report.H},
                {"M", report.M},
                {"N", report.N},
                {"degenerate", report.degenerate}};
    return doc.dump();
}

FitnessReport fitness_report_from_json(std::string_view text) {
    const json doc = json::parse(text);
    FitnessReport r;
    r.degenerate = doc.at("degenerate").get<bool>();
    r.F = doc.at("F").is_null() ? -std::numeric_limits<double>::infinity()
                                : doc.at("F").get<double>();
    r.E = doc.at("E").get<double>();
    r.ne = doc.at("ne").get<std::uint64_t>();
    r.H = doc.at("H").get<double>();
    r.M = doc.at("M").get<int>();
    r.N = doc.at("N").get<int>();
    return r;
}

std::optional<double> fitness_delta(const FitnessReport& before, const FitnessReport& after) {
    if (before.degenerate || after.degenerate) return std::nullopt;
    return after.F - before.F;
}

}  // namespace fce
