#include "gwlp/aberration.hpp"

#include "gwlp/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <numeric>

namespace gwlp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// cos(2*pi*k/t) for the t whose cosines are all rational
std::vector<Rational> rational_cosines(int t) {
    switch (t) {
        case 1: return {1};
        case 2: return {1, -1};
        case 3: return {1, {-1, 2}, {-1, 2}};
        case 4: return {1, 0, -1, 0};
        case 6: return {1, {1, 2}, {-1, 2}, -1, {-1, 2}, {1, 2}};
        default: throw InternalError(fmt::format("cos(2 pi k / {}) is not rational", t));
    }
}

// sum_i n_i * n_[i-k]
std::int64_t lagged_product(const std::vector<std::int64_t>& n, std::size_t k) {
    const std::size_t t = n.size();
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < t; ++i) acc += n[i] * n[(i + t - k) % t];
    return acc;
}

AberrationValue aberration_of(const std::vector<std::int64_t>& n) {
    const int t = static_cast<int>(n.size());
    const std::int64_t total = std::accumulate(n.begin(), n.end(), std::int64_t{0});
    if (total <= 0) throw ValidationError("aberration needs a positive run count");
    AberrationValue out;
    out.t = t;
    const double n2 = static_cast<double>(total) * static_cast<double>(total);
    if (has_rational_cosines(t)) {
        const auto cosines = rational_cosines(t);
        Rational acc = 0;
        for (int k = 0; k < t; ++k)
            if (cosines[k].numerator() != 0) acc += cosines[k] * lagged_product(n, static_cast<std::size_t>(k));
        out.exact = acc / (total * total);
        out.approx = to_double(*out.exact);
    } else {
        double acc = 0.0;
        for (int k = 0; k < t; ++k)
            acc += std::cos(kTwoPi * k / t) * static_cast<double>(lagged_product(n, static_cast<std::size_t>(k)));
        out.approx = std::max(acc / n2, 0.0);
    }
    return out;
}

const LevelCounts& checked(const LevelCounts& counts) {
    if (counts.t < 1 || counts.counts.size() != static_cast<std::size_t>(counts.t))
        throw ValidationError(fmt::format("level counts have {} entries for t = {}", counts.counts.size(), counts.t));
    for (auto c : counts.counts)
        if (c < 0) throw ValidationError("level counts must be nonnegative");
    if (counts.total() < 1) throw ValidationError("level counts must have a positive total");
    return counts;
}

}  // namespace

std::complex<double> Coefficient::value() const {
    const int t = counts.t;
    std::complex<double> acc = 0.0;
    for (int h = 0; h < t; ++h) {
        const auto n = static_cast<double>(counts.counts[static_cast<std::size_t>((t - h) % t)]);
        acc += n * std::polar(1.0, kTwoPi * h / t);
    }
    return acc / static_cast<double>(denominator);
}

Coefficient coefficient_from_counts(const Fraction& fraction, const Exponent& alpha) {
    return {level_counts(fraction, alpha), fraction.design().cardinality()};
}

std::complex<double> coefficient_direct(const Fraction& fraction, const Exponent& alpha) {
    const auto& design = fraction.design();
    validate_exponent(design, alpha);
    std::complex<double> acc = 0.0;
    for (const auto& [point, mult] : fraction.entries()) {
        double phase = 0.0;
        for (std::size_t j = 0; j < design.factors(); ++j)
            phase += static_cast<double>(alpha[j] * point[j] % design.levels(j)) / design.levels(j);
        acc += static_cast<double>(mult) * std::polar(1.0, -kTwoPi * phase);
    }
    return acc / static_cast<double>(design.cardinality());
}

bool check_coefficient_convolution(const Fraction& fraction, const Exponent& alpha, double tolerance) {
    if (!fraction.single_replicate())
        throw ValidationError("the coefficient convolution holds only for single replicate fractions");
    const auto& design = fraction.design();
    validate_exponent(design, alpha);
    const auto table = level_count_table(fraction, Execution::serial);
    std::vector<std::complex<double>> c;
    c.reserve(table.size());
    for (const auto& counts : table) c.push_back(Coefficient{counts, design.cardinality()}.value());

    std::complex<double> conv = 0.0;
    for (std::int64_t b = 0; b < design.lattice_size(); ++b) {
        const auto diff = exponent_diff(design, alpha, exponent_at(design, b));
        conv += c[static_cast<std::size_t>(b)] * c[static_cast<std::size_t>(lattice_index(design, diff))];
    }
    return std::abs(c[static_cast<std::size_t>(lattice_index(design, alpha))] - conv) < tolerance;
}

bool has_rational_cosines(int t) noexcept { return t == 1 || t == 2 || t == 3 || t == 4 || t == 6; }

AberrationValue aberration(const LevelCounts& counts) { return aberration_of(checked(counts).counts); }

MeanAberrationValue mean_aberration(const LevelCounts& counts) {
    const auto& n = checked(counts).counts;
    const auto t = static_cast<std::int64_t>(n.size());
    if (t == 1) return {Rational(0)};
    std::int64_t spread = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j) spread += (n[i] - n[j]) * (n[i] - n[j]);
    const std::int64_t total = counts.total();
    return {Rational(spread, total * total * (t - 1))};
}

AberrationValue mean_aberration_oracle(const LevelCounts& counts) {
    checked(counts);
    const int t = counts.t;
    if (t > 8) throw ValidationError(fmt::format("permutation oracle limited to t <= 8, got t = {}", t));
    std::vector<std::size_t> order(static_cast<std::size_t>(t));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::int64_t> permuted(order.size());
    std::int64_t permutations = 0;
    Rational exact = 0;
    long double approx = 0.0L;
    do {
        for (std::size_t i = 0; i < order.size(); ++i) permuted[i] = counts.counts[order[i]];
        const auto a = aberration_of(permuted);
        if (a.exact) exact += *a.exact;
        approx += a.approx;
        ++permutations;
    } while (std::next_permutation(order.begin(), order.end()));

    AberrationValue out;
    out.t = t;
    if (has_rational_cosines(t)) {
        out.exact = exact / permutations;
        out.approx = to_double(*out.exact);
    } else {
        out.approx = static_cast<double>(approx / permutations);
    }
    return out;
}

Rational counts_variance(const LevelCounts& counts) {
    const auto& n = checked(counts).counts;
    const auto t = static_cast<std::int64_t>(n.size());
    std::int64_t squares = 0;
    for (auto c : n) squares += c * c;
    const std::int64_t total = counts.total();
    return Rational(squares, t) - Rational(total * total, t * t);
}

namespace {

template <typename Term>
GWLPVector accumulate_gwlp(const DesignSpec& design, const std::vector<LevelCounts>& table, Term term) {
    GWLPVector out;
    out.exact.assign(design.factors(), Rational(0));
    out.approx.assign(design.factors(), 0.0);
    bool exact = true;
    for (const auto& counts : table) {
        const int order = counts.alpha.order();
        if (order == 0) continue;
        const auto [value, approx] = term(counts);
        const auto j = static_cast<std::size_t>(order - 1);
        if (value)
            out.exact[j] += *value;
        else
            exact = false;
        out.approx[j] += approx;
    }
    out.mode = exact ? GwlpMode::exact : GwlpMode::approximate;
    if (exact)
        for (std::size_t j = 0; j < out.exact.size(); ++j) out.approx[j] = to_double(out.exact[j]);
    else
        out.exact.clear();
    return out;
}

// n^2 A_j = sum_alpha sum_k zeta_t^k L_{alpha,k}, collected per order as a
// polynomial in zeta_D and reduced modulo Phi_D.
std::optional<std::vector<Rational>> exact_classic(const DesignSpec& design, const std::vector<LevelCounts>& table,
                                                   std::int64_t n) {
    const auto D = design.levels_lcm();
    if (D > 100'000) return std::nullopt;
    std::vector<IntPoly> sums(design.factors(), IntPoly(static_cast<std::size_t>(D), 0));
    for (const auto& counts : table) {
        const int order = counts.alpha.order();
        if (order == 0) continue;
        auto& poly = sums[static_cast<std::size_t>(order - 1)];
        const auto t = static_cast<std::size_t>(counts.t);
        for (std::size_t k = 0; k < t; ++k) {
            auto& slot = poly[k * static_cast<std::size_t>(D) / t];
            if (__builtin_add_overflow(slot, lagged_product(counts.counts, k), &slot)) return std::nullopt;
        }
    }
    std::vector<Rational> out;
    for (const auto& poly : sums) {
        const auto value = rational_value(poly, static_cast<int>(D));
        if (!value) return std::nullopt;
        out.push_back(*value / Rational(n * n));
    }
    return out;
}

}  // namespace

GWLPVector gwlp_classic(const Fraction& fraction, Execution exec) {
    const auto& design = fraction.design();
    const auto table = level_count_table(fraction, exec);
    auto out = accumulate_gwlp(design, table, [](const LevelCounts& counts) {
        const auto a = aberration(counts);
        return std::pair{a.exact, a.approx};
    });
    if (out.mode == GwlpMode::approximate) {
        if (auto exact = exact_classic(design, table, fraction.size())) {
            out.mode = GwlpMode::exact;
            out.exact = std::move(*exact);
            for (std::size_t j = 0; j < out.exact.size(); ++j) out.approx[j] = to_double(out.exact[j]);
        }
    }
    return out;
}

GWLPVector gwlp_mean(const Fraction& fraction, Execution exec) {
    const auto& design = fraction.design();
    if (!design.is_symmetric_prime())
        throw ValidationError(
            "the mean-aberration GWLP requires a symmetric s^m design with s prime; for other designs the "
            "GWLP is not the sum of the mean aberrations");
    return accumulate_gwlp(design, level_count_table(fraction, exec), [](const LevelCounts& counts) {
        const auto a = mean_aberration(counts);
        return std::pair{std::optional<Rational>(a.exact), a.approx()};
    });
}

GmaOrder gma_compare(const GWLPVector& a, const GWLPVector& b) {
    if (a.size() != b.size())
        throw ValidationError(fmt::format("cannot compare GWLPs of length {} and {}", a.size(), b.size()));
    const bool exact = a.mode == GwlpMode::exact && b.mode == GwlpMode::exact;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (exact) {
            if (a.exact[j] < b.exact[j]) return GmaOrder::better;
            if (b.exact[j] < a.exact[j]) return GmaOrder::worse;
        } else {
            if (std::abs(a.approx[j] - b.approx[j]) <= kGmaTolerance) continue;
            return a.approx[j] < b.approx[j] ? GmaOrder::better : GmaOrder::worse;
        }
    }
    return GmaOrder::equal;
}

std::int64_t AberrationDistribution::total() const {
    std::int64_t acc = 0;
    for (const auto& [value, count] : histogram) acc += count;
    return acc;
}

Rational AberrationDistribution::weighted_sum() const {
    Rational acc = 0;
    for (const auto& [value, count] : histogram) acc += value * count;
    return acc;
}

AberrationDistribution aberration_distribution(const DesignSpec& design, const std::vector<LevelCounts>& table,
                                               int order) {
    if (order < 1 || static_cast<std::size_t>(order) > design.factors())
        throw ValidationError(fmt::format("order {} outside [1, {}]", order, design.factors()));
    AberrationDistribution out{order, {}};
    for (const auto& counts : table)
        if (counts.alpha.order() == order) ++out.histogram[mean_aberration(counts).exact];
    return out;
}

AberrationDistribution aberration_distribution(const Fraction& fraction, int order, Execution exec) {
    const auto& design = fraction.design();
    if (order < 1 || static_cast<std::size_t>(order) > design.factors())
        throw ValidationError(fmt::format("order {} outside [1, {}]", order, design.factors()));
    return aberration_distribution(design, level_count_table(fraction, exec), order);
}

}  // namespace gwlp
