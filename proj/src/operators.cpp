#include <cmath>

#include "fce/optimizers.hpp"

namespace fce {

namespace {

double unit_draw(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Table-style Normal(mu, sigma) with the mean's sign chosen by a fair coin.
double signed_step(const HyperParams& hp, Rng& rng) {
    const double sign = (rng() & 1U) ? 1.0 : -1.0;
    double step = sign * hp.mutate_mu;
    if (hp.mutate_sigma > 0.0) {
        step += std::normal_distribution<double>(0.0, hp.mutate_sigma)(rng);
    }
    return step;
}

MembershipFunction perturbed(MembershipFunction fn, const HyperParams& hp, Rng& rng) {
    fn.p1 += signed_step(hp, rng);
    if (fn.family == Family::sigmoid) {
        const double direction = fn.p2 < 0.0 ? -1.0 : 1.0;
        double width = sigmoid_width(fn.p2) + signed_step(hp, rng);
        if (!(width >= kMinWidth)) width = kMinWidth;
        fn.p2 = sigmoid_slope(width, direction);
    } else {
        fn.p2 += signed_step(hp, rng);
    }
    if (hp.mutable_targets) {
        fn.v += signed_step(hp, rng);
    }
    return repaired(fn);
}

}  // namespace

Genome shape_mutate(const Genome& g, const HyperParams& hp, Rng& rng) {
    std::vector<MembershipFunction> fns = g.to_vector();
    for (auto& fn : fns) {
        if (unit_draw(rng) < hp.change_prob) {
            fn = perturbed(fn, hp, rng);
        }
    }
    return Genome(std::move(fns));
}

std::pair<MembershipFunction, MembershipFunction> split_function(const MembershipFunction& fn) {
    const double v = fn.v;
    switch (fn.family) {
        case Family::triangle: {
            const double half = fn.p2 / 2.0;
            return {triangle(fn.p1 - half, half, v), triangle(fn.p1 + half, half, v)};
        }
        case Family::gaussian: {
            const double sigma = fn.p2;
            return {gaussian(fn.p1 - sigma, sigma / 2.0, v), gaussian(fn.p1 + sigma, sigma / 2.0, v)};
        }
        case Family::shoulder_left: {
            // Flat top keeps the first half of the ramp; a triangle peaking at
            // the midpoint takes over the released second half.
            const double mid = 0.5 * (fn.p1 + fn.p2);
            return {shoulder_left(fn.p1, mid, v), triangle(mid, 0.5 * (fn.p2 - fn.p1), v)};
        }
        case Family::shoulder_right: {
            const double mid = 0.5 * (fn.p1 + fn.p2);
            return {triangle(mid, 0.5 * (fn.p2 - fn.p1), v), shoulder_right(mid, fn.p2, v)};
        }
        case Family::sigmoid: {
            const double width = sigmoid_width(fn.p2);
            const double direction = fn.p2 < 0.0 ? -1.0 : 1.0;
            const double slope = sigmoid_slope(width / 2.0, direction);
            return {sigmoid(fn.p1 - width / 2.0, slope, v), sigmoid(fn.p1 + width / 2.0, slope, v)};
        }
    }
    return {fn, fn};
}

Genome split_at(const Genome& g, std::size_t index) {
    if (index >= g.size()) {
        throw GenomeError("split index " + std::to_string(index) + " out of range");
    }
    std::vector<MembershipFunction> fns;
    fns.reserve(g.size() + 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == index) {
            const auto [left, right] = split_function(g[i]);
            fns.push_back(repaired(left));
            fns.push_back(repaired(right));
        } else {
            fns.push_back(g[i]);
        }
    }
    return Genome(std::move(fns));
}

Genome split_mutate(const Genome& g, const HyperParams& hp, Rng& rng) {
    if (unit_draw(rng) < hp.membership_split_prob) {
        const auto index =
            std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng);
        return split_at(g, index);
    }
    return shape_mutate(g, hp, rng);
}

std::pair<Genome, Genome> uniform_crossover(const Genome& a, const Genome& b, double p, Rng& rng) {
    if (a.size() != b.size()) {
        throw GenomeError("crossover needs equal-length parents, got " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
    }
    std::vector<MembershipFunction> left = a.to_vector();
    std::vector<MembershipFunction> right = b.to_vector();
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (unit_draw(rng) < p) std::swap(left[i], right[i]);
    }
    return {Genome(std::move(left)), Genome(std::move(right))};
}

Genome ga_mutate(const Genome& g, const HyperParams& hp, Rng& rng) {
    return shape_mutate(g, hp, rng);
}

}  // namespace fce
