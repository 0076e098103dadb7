#include "gwlp/design.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <numeric>

namespace gwlp {

DesignSpec::DesignSpec(std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw ValidationError("design needs at least one factor");
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        if (levels_[j] < 2)
            throw ValidationError(
                fmt::format("factor {} has {} levels; every factor needs at least 2", j, levels_[j]));
        if (cardinality_ > (std::int64_t{1} << 50) / levels_[j])
            throw ValidationError("design too large: more than 2^50 points");
        cardinality_ *= levels_[j];
        lcm_ = std::lcm(lcm_, static_cast<std::int64_t>(levels_[j]));
    }
}

bool DesignSpec::is_symmetric() const noexcept {
    return std::adjacent_find(levels_.begin(), levels_.end(), std::not_equal_to<>{}) == levels_.end();
}

bool DesignSpec::is_symmetric_prime() const noexcept { return is_symmetric() && is_prime(levels_.front()); }

DesignSpec make_design(std::vector<int> levels) { return DesignSpec(std::move(levels)); }

bool is_prime(int value) noexcept {
    if (value < 2) return false;
    for (int d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

int Exponent::order() const noexcept {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int a) { return a != 0; }));
}

void validate_exponent(const DesignSpec& design, const Exponent& alpha) {
    if (alpha.size() != design.factors())
        throw ValidationError(fmt::format("exponent ({}) has {} entries, design has {} factors",
                                          fmt::join(alpha.entries(), ","), alpha.size(), design.factors()));
    for (std::size_t j = 0; j < alpha.size(); ++j)
        if (alpha[j] < 0 || alpha[j] >= design.levels(j))
            throw ValidationError(fmt::format("exponent entry {} = {} outside [0, {})", j, alpha[j], design.levels(j)));
}

void validate_point(const DesignSpec& design, const Point& point) {
    if (point.size() != design.factors())
        throw ValidationError(
            fmt::format("point has {} coordinates, design has {} factors", point.size(), design.factors()));
    for (std::size_t j = 0; j < point.size(); ++j)
        if (point[j] < 0 || point[j] >= design.levels(j))
            throw ValidationError(fmt::format("point coordinate {} = {} outside [0, {})", j, point[j], design.levels(j)));
}

std::int64_t lattice_index(const DesignSpec& design, const Exponent& alpha) {
    std::int64_t index = 0;
    for (std::size_t j = 0; j < design.factors(); ++j) index = index * design.levels(j) + alpha[j];
    return index;
}

Exponent exponent_at(const DesignSpec& design, std::int64_t index) {
    std::vector<int> entries(design.factors());
    for (std::size_t j = design.factors(); j-- > 0;) {
        entries[j] = static_cast<int>(index % design.levels(j));
        index /= design.levels(j);
    }
    return Exponent(std::move(entries));
}

std::vector<Exponent> all_exponents(const DesignSpec& design) {
    std::vector<Exponent> result;
    result.reserve(static_cast<std::size_t>(design.lattice_size()));
    for (std::int64_t i = 0; i < design.lattice_size(); ++i) result.push_back(exponent_at(design, i));
    return result;
}

std::vector<Exponent> exponents_of_order(const DesignSpec& design, int order) {
    std::vector<Exponent> result;
    for (std::int64_t i = 0; i < design.lattice_size(); ++i) {
        auto alpha = exponent_at(design, i);
        if (alpha.order() == order) result.push_back(std::move(alpha));
    }
    return result;
}

std::int64_t count_exponents_of_order(const DesignSpec& design, int order) {
    // elementary symmetric polynomial of (s_j - 1)
    std::vector<std::int64_t> e(design.factors() + 1, 0);
    e[0] = 1;
    for (int s : design.levels())
        for (std::size_t k = design.factors(); k >= 1; --k) e[k] += e[k - 1] * (s - 1);
    if (order < 0 || static_cast<std::size_t>(order) > design.factors()) return 0;
    return e[static_cast<std::size_t>(order)];
}

int term_levels(const DesignSpec& design, const Exponent& alpha) {
    std::int64_t t = 1;
    for (std::size_t j = 0; j < design.factors(); ++j) {
        const int s = design.levels(j);
        const int g = alpha[j] == 0 ? s : std::gcd(alpha[j], s);
        t = std::lcm(t, static_cast<std::int64_t>(s / g));
    }
    return static_cast<int>(t);
}

int eval_term(const DesignSpec& design, const Exponent& alpha, const Point& point) {
    const std::int64_t D = design.levels_lcm();
    std::int64_t e = 0;
    for (std::size_t j = 0; j < design.factors(); ++j)
        e = (e + static_cast<std::int64_t>(alpha[j]) * point[j] % design.levels(j) * (D / design.levels(j))) % D;
    const std::int64_t t = term_levels(design, alpha);
    if ((e * t) % D != 0)
        throw InternalError(fmt::format("X^({}) does not map into the {}-th roots of unity",
                                        fmt::join(alpha.entries(), ","), t));
    return static_cast<int>(e * t / D);
}

Exponent exponent_diff(const DesignSpec& design, const Exponent& alpha, const Exponent& beta) {
    std::vector<int> entries(design.factors());
    for (std::size_t j = 0; j < design.factors(); ++j) {
        const int s = design.levels(j);
        entries[j] = ((alpha[j] - beta[j]) % s + s) % s;
    }
    return Exponent(std::move(entries));
}

Exponent exponent_scale(const DesignSpec& design, int h, const Exponent& alpha) {
    std::vector<int> entries(design.factors());
    for (std::size_t j = 0; j < design.factors(); ++j) {
        const int s = design.levels(j);
        entries[j] = static_cast<int>((static_cast<std::int64_t>(h) * alpha[j] % s + s) % s);
    }
    return Exponent(std::move(entries));
}

Exponent exponent_negate(const DesignSpec& design, const Exponent& alpha) {
    return exponent_scale(design, -1, alpha);
}

Fraction::Fraction(DesignSpec design, const std::vector<Point>& points) : design_(std::move(design)) {
    entries_.reserve(points.size());
    for (const auto& p : points) entries_.emplace_back(p, 1);
    finish();
}

Fraction::Fraction(DesignSpec design, std::vector<Entry> entries)
    : design_(std::move(design)), entries_(std::move(entries)) {
    finish();
}

void Fraction::finish() {
    for (const auto& [point, mult] : entries_) {
        validate_point(design_, point);
        if (mult < 1) throw ValidationError("multiplicities must be positive");
    }
    std::sort(entries_.begin(), entries_.end());
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    entries_ = std::move(merged);
    if (entries_.empty()) throw ValidationError("a fraction needs at least one run");
    size_ = 0;
    single_replicate_ = true;
    for (const auto& [point, mult] : entries_) {
        size_ += mult;
        if (mult != 1) single_replicate_ = false;
    }
}

std::int64_t Fraction::multiplicity(const Point& point) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), point,
                               [](const Entry& e, const Point& p) { return e.first < p; });
    return it != entries_.end() && it->first == point ? it->second : 0;
}

Fraction Fraction::full_factorial(const DesignSpec& design) {
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(design.cardinality()));
    for (std::int64_t i = 0; i < design.cardinality(); ++i) points.emplace_back(exponent_at(design, i).entries());
    return Fraction(design, points);
}

std::int64_t LevelCounts::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

LevelCounts level_counts(const Fraction& fraction, const Exponent& alpha) {
    const auto& design = fraction.design();
    validate_exponent(design, alpha);
    LevelCounts result{alpha, term_levels(design, alpha), {}};
    result.counts.assign(static_cast<std::size_t>(result.t), 0);
    for (const auto& [point, mult] : fraction.entries())
        result.counts[static_cast<std::size_t>(eval_term(design, alpha, point))] += mult;
    return result;
}

}  // namespace gwlp
