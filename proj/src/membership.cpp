#include "fce/membership.hpp"

#include <algorithm>
#include <cmath>

namespace fce {

std::string_view to_string(Family family) {
    switch (family) {
        case Family::shoulder_left: return "shoulder-left";
        case Family::shoulder_right: return "shoulder-right";
        case Family::triangle: return "triangle";
        case Family::gaussian: return "gaussian";
        case Family::sigmoid: return "sigmoid";
    }
    return "unknown";
}

Family family_from_string(std::string_view name) {
    for (const Family f : {Family::shoulder_left, Family::shoulder_right, Family::triangle,
                           Family::gaussian, Family::sigmoid}) {
        if (to_string(f) == name) return f;
    }
    throw std::invalid_argument("unknown membership family '" + std::string(name) + "'");
}

double MembershipFunction::operator()(double z) const {
    switch (family) {
        case Family::shoulder_left:
            if (z <= p1) return 1.0;
            if (z >= p2) return 0.0;
            return (p2 - z) / (p2 - p1);
        case Family::shoulder_right:
            if (z <= p1) return 0.0;
            if (z >= p2) return 1.0;
            return (z - p1) / (p2 - p1);
        case Family::triangle:
            return std::max(0.0, 1.0 - std::abs(z - p1) / p2);
        case Family::gaussian: {
            const double d = z - p1;
            return std::exp(-(d * d) / (2.0 * p2 * p2));
        }
        case Family::sigmoid:
            return 1.0 / (1.0 + std::exp(-p2 * (z - p1)));
    }
    return 0.0;
}

double MembershipFunction::center() const {
    if (family == Family::shoulder_left || family == Family::shoulder_right) {
        return 0.5 * (p1 + p2);
    }
    return p1;
}

MembershipFunction shoulder_left(double top_end, double zero_start, double v) {
    return {Family::shoulder_left, top_end, zero_start, v};
}
MembershipFunction shoulder_right(double zero_end, double top_start, double v) {
    return {Family::shoulder_right, zero_end, top_start, v};
}
MembershipFunction triangle(double center, double half_width, double v) {
    return {Family::triangle, center, half_width, v};
}
MembershipFunction gaussian(double mean, double sigma, double v) {
    return {Family::gaussian, mean, sigma, v};
}
MembershipFunction sigmoid(double center, double slope, double v) {
    return {Family::sigmoid, center, slope, v};
}

double sigmoid_width(double slope) { return 4.0 / std::abs(slope); }

double sigmoid_slope(double width, double sign) {
    return (sign < 0.0 ? -4.0 : 4.0) / width;
}

namespace {

bool in_range(double x, double lo, double hi) { return std::isfinite(x) && x >= lo && x <= hi; }

double clamp_finite(double x, double lo, double hi, double fallback) {
    if (!std::isfinite(x)) return fallback;
    return std::clamp(x, lo, hi);
}

}  // namespace

std::string invariant_violation(const MembershipFunction& fn) {
    if (!in_range(fn.v, 0.0, kMaxIntensity)) return "v outside [0,255]";
    switch (fn.family) {
        case Family::shoulder_left:
        case Family::shoulder_right:
            if (!in_range(fn.p1, 0.0, kMaxIntensity) || !in_range(fn.p2, 0.0, kMaxIntensity)) {
                return "shoulder breakpoints outside [0,255]";
            }
            if (!(fn.p2 - fn.p1 >= kMinWidth)) return "shoulder requires p1 < p2";
            return {};
        case Family::triangle:
        case Family::gaussian:
            if (!in_range(fn.p1, 0.0, kMaxIntensity)) return "center outside [0,255]";
            if (!in_range(fn.p2, kMinWidth, kMaxWidth)) return "width outside [0.5,255]";
            return {};
        case Family::sigmoid:
            if (!in_range(fn.p1, 0.0, kMaxIntensity)) return "center outside [0,255]";
            if (!std::isfinite(fn.p2) || fn.p2 == 0.0) return "sigmoid slope must be nonzero";
            // 4/(4/w) can differ from w in the last ulp.
            if (!in_range(sigmoid_width(fn.p2), kMinWidth * (1 - 1e-12), kMaxWidth * (1 + 1e-12))) {
                return "sigmoid transition width outside [0.5,255]";
            }
            return {};
    }
    return "unknown family";
}

MembershipFunction repaired(MembershipFunction fn) {
    fn.v = clamp_finite(fn.v, 0.0, kMaxIntensity, 127.0);
    switch (fn.family) {
        case Family::shoulder_left:
        case Family::shoulder_right: {
            double a = clamp_finite(fn.p1, 0.0, kMaxIntensity, 0.0);
            double b = clamp_finite(fn.p2, 0.0, kMaxIntensity, kMaxIntensity);
            if (b - a < kMinWidth) {
                // Re-open the ramp around its midpoint, then shift it back inside [0,255].
                const double mid = std::clamp(0.5 * (a + b), 0.5 * kMinWidth,
                                              kMaxIntensity - 0.5 * kMinWidth);
                a = mid - 0.5 * kMinWidth;
                b = mid + 0.5 * kMinWidth;
                // Rounding can leave the ramp an ulp short.
                while (b - a < kMinWidth) {
                    if (b < kMaxIntensity) {
                        b = std::nextafter(b, kMaxIntensity);
                    } else {
                        a = std::nextafter(a, 0.0);
                    }
                }
            }
            fn.p1 = a;
            fn.p2 = b;
            break;
        }
        case Family::triangle:
        case Family::gaussian:
            fn.p1 = clamp_finite(fn.p1, 0.0, kMaxIntensity, 127.0);
            fn.p2 = clamp_finite(fn.p2, kMinWidth, kMaxWidth, kMinWidth);
            break;
        case Family::sigmoid: {
            fn.p1 = clamp_finite(fn.p1, 0.0, kMaxIntensity, 127.0);
            const double sign = fn.p2 < 0.0 ? -1.0 : 1.0;
            const double width = (std::isfinite(fn.p2) && fn.p2 != 0.0)
                                     ? std::clamp(sigmoid_width(fn.p2), kMinWidth, kMaxWidth)
                                     : kMaxWidth;
            if (width != sigmoid_width(fn.p2)) fn.p2 = sigmoid_slope(width, sign);
            break;
        }
    }
    return fn;
}

}  // namespace fce
