#pragma once

#include "gwlp/design.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace gwlp::testing {

inline Point random_point(const DesignSpec& design, std::mt19937& rng) {
    std::vector<int> coords;
    for (int s : design.levels()) coords.push_back(std::uniform_int_distribution<int>(0, s - 1)(rng));
    return Point(std::move(coords));
}

/// n runs drawn with replacement.
inline Fraction random_multiset(const DesignSpec& design, int n, std::mt19937& rng) {
    std::vector<Point> points;
    for (int i = 0; i < n; ++i) points.push_back(random_point(design, rng));
    return Fraction(design, points);
}

/// n distinct runs, n <= #D.
inline Fraction random_single_replicate(const DesignSpec& design, int n, std::mt19937& rng) {
    std::vector<std::int64_t> indices(static_cast<std::size_t>(design.cardinality()));
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<std::int64_t>(i);
    std::shuffle(indices.begin(), indices.end(), rng);
    std::vector<Point> points;
    for (int i = 0; i < n; ++i) points.emplace_back(exponent_at(design, indices[static_cast<std::size_t>(i)]).entries());
    return Fraction(design, points);
}

/// Calls f on every subset of the full factorial with size in [lo, hi].
template <class F>
void for_each_subset(const DesignSpec& design, int lo, int hi, F&& f) {
    const int N = static_cast<int>(design.cardinality());
    std::vector<int> pick;
    auto rec = [&](auto& self, int start) -> void {
        const int k = static_cast<int>(pick.size());
        if (k >= lo && k <= hi) {
            std::vector<Point> points;
            for (int i : pick) points.emplace_back(exponent_at(design, i).entries());
            f(Fraction(design, points));
        }
        if (k == hi) return;
        for (int i = start; i < N; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

inline LevelCounts make_counts(std::vector<std::int64_t> counts) {
    LevelCounts lc{Exponent({1}), static_cast<int>(counts.size()), std::move(counts)};
    return lc;
}

}  // namespace gwlp::testing
