#include "fce/genome.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fce {

using nlohmann::json;

Genome::Genome(std::vector<MembershipFunction> functions) : functions_(std::move(functions)) {
    if (functions_.size() < kMinGenomeSize) {
        throw GenomeError("a genome needs at least 3 membership functions, got " +
                          std::to_string(functions_.size()));
    }
    for (std::size_t i = 0; i < functions_.size(); ++i) {
        const std::string why = invariant_violation(functions_[i]);
        if (!why.empty()) {
            throw GenomeError("membership function " + std::to_string(i) + " (" +
                              std::string(to_string(functions_[i].family)) + "): " + why);
        }
    }
    std::stable_sort(functions_.begin(), functions_.end(),
                     [](const MembershipFunction& a, const MembershipFunction& b) {
                         return a.center() < b.center();
                     });
}

std::string_view to_string(FamilySet set) {
    switch (set) {
        case FamilySet::trapezoid_triangle: return "trapezoid-triangle";
        case FamilySet::gaussian_only: return "gaussian-only";
        case FamilySet::gaussian_sigmoid: return "gaussian-sigmoid";
    }
    return "unknown";
}

Genome default_genome(FamilySet set) {
    switch (set) {
        case FamilySet::trapezoid_triangle:
            return Genome({shoulder_left(0.0, 127.0, 0.0), triangle(127.0, 96.0, 127.0),
                           shoulder_right(127.0, 255.0, 255.0)});
        case FamilySet::gaussian_only:
            return Genome({gaussian(0.0, 50.0, 0.0), gaussian(127.0, 50.0, 127.0),
                           gaussian(255.0, 50.0, 255.0)});
        case FamilySet::gaussian_sigmoid:
            // Decreasing sigmoid = dark, increasing sigmoid = bright; width 4/0.08 = 50.
            return Genome({sigmoid(63.0, -0.08, 0.0), gaussian(127.0, 50.0, 127.0),
                           sigmoid(191.0, 0.08, 255.0)});
    }
    throw GenomeError("unknown family set");
}

Genome identity_genome() {
    return Genome({triangle(0.0, 127.5, 0.0), triangle(127.5, 127.5, 127.5),
                   triangle(255.0, 127.5, 255.0)});
}

std::string genome_to_json(const Genome& g) {
    json doc = json::array();
    for (const auto& fn : g.functions()) {
        doc.push_back({{"family", std::string(to_string(fn.family))},
                       {"p1", fn.p1},
                       {"p2", fn.p2},
                       {"v", fn.v}});
    }
    return doc.dump(2) + "\n";
}

Genome genome_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GenomeError(std::string("malformed genome JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw GenomeError("genome JSON must be an array of membership functions");
    }
    std::vector<MembershipFunction> fns;
    for (const auto& item : doc) {
        try {
            fns.push_back({family_from_string(item.at("family").get<std::string>()),
                           item.at("p1").get<double>(), item.at("p2").get<double>(),
                           item.at("v").get<double>()});
        } catch (const json::exception& e) {
            throw GenomeError(std::string("malformed membership function: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw GenomeError(e.what());
        }
    }
    return Genome(std::move(fns));
}

void write_genome_file(const Genome& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GenomeError(path.string() + ": cannot open for writing");
    out << genome_to_json(g);
    if (!out) throw GenomeError(path.string() + ": write failed");
}

Genome read_genome_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GenomeError(path.string() + ": cannot open genome file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return genome_from_json(buf.str());
}

}  // namespace fce
