#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fce {

enum class Family { shoulder_left, shoulder_right, triangle, gaussian, sigmoid };

std::string_view to_string(Family family);
/// Accepts the names produced by to_string; throws std::invalid_argument otherwise.
Family family_from_string(std::string_view name);

// Bounds shared by every width-like parameter (triangle half-width, gaussian
// sigma, shoulder ramp length, sigmoid transition width 4/|slope|).
inline constexpr double kMinWidth = 0.5;
inline constexpr double kMaxWidth = 255.0;
inline constexpr double kMaxIntensity = 255.0;

/// One fuzzy set as a (p1, p2, v) triple. Meaning of p1/p2 per family:
///   shoulder_left   ramp from 1 at p1 down to 0 at p2 (p1 < p2)
///   shoulder_right  ramp from 0 at p1 up to 1 at p2 (p1 < p2)
///   triangle        center p1, half-width p2
///   gaussian        mean p1, sigma p2
///   sigmoid         center p1, signed slope p2 (negative = decreasing)
/// `v` is the crisp output this set pulls towards during defuzzification.
struct MembershipFunction {
    Family family = Family::triangle;
    double p1 = 0.0;
    double p2 = 1.0;
    double v = 0.0;

    /// Degree of membership in [0,1].
    double operator()(double z) const;

    /// Position used to order functions within a genome.
    double center() const;

    bool operator==(const MembershipFunction&) const = default;
};

MembershipFunction shoulder_left(double top_end, double zero_start, double v);
MembershipFunction shoulder_right(double zero_end, double top_start, double v);
MembershipFunction triangle(double center, double half_width, double v);
MembershipFunction gaussian(double mean, double sigma, double v);
MembershipFunction sigmoid(double center, double slope, double v);

/// Transition width of a sigmoid, 4/|slope|: the span of its linearisation at the center.
double sigmoid_width(double slope);
double sigmoid_slope(double width, double sign);

/// Empty string when `fn` satisfies its family's invariants, otherwise the reason.
std::string invariant_violation(const MembershipFunction& fn);

/// Projects any parameter values back onto the family's valid region.
/// Idempotent; leaves valid functions unchanged.
MembershipFunction repaired(MembershipFunction fn);

}  // namespace fce
