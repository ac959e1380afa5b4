#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fce/membership.hpp"

namespace fce {

class GenomeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMinGenomeSize = 3;

/// Ordered set of at least three membership functions, kept sorted by
/// MembershipFunction::center(). Immutable once constructed.
class Genome {
public:
    /// Sorts `functions`; throws GenomeError when there are fewer than three
    /// or any function violates its family's invariants.
    explicit Genome(std::vector<MembershipFunction> functions);

    std::span<const MembershipFunction> functions() const noexcept { return functions_; }
    std::size_t size() const noexcept { return functions_.size(); }
    const MembershipFunction& operator[](std::size_t i) const { return functions_[i]; }

    /// Copy of the function list, for operators that build a new genome.
    std::vector<MembershipFunction> to_vector() const { return functions_; }

    bool operator==(const Genome&) const = default;

private:
    std::vector<MembershipFunction> functions_;
};

enum class FamilySet { trapezoid_triangle, gaussian_only, gaussian_sigmoid };

std::string_view to_string(FamilySet set);

/// The dark/gray/bright starting rule set: targets 0, 127 and 255.
Genome default_genome(FamilySet set);

/// Three overlapping triangles (centers 0, 127.5, 255; half-width 127.5)
/// whose targets equal their centers, so defuzzification reproduces the input.
Genome identity_genome();

/// JSON array of {"family", "p1", "p2", "v"} objects.
std::string genome_to_json(const Genome& g);
Genome genome_from_json(std::string_view text);

void write_genome_file(const Genome& g, const std::filesystem::path& path);
Genome read_genome_file(const std::filesystem::path& path);

}  // namespace fce
