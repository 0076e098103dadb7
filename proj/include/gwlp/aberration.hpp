#pragma once

// Indicator-function coefficients, aberrations, mean aberrations and the
// generalized word-length pattern, all computed from level counts.

#include "gwlp/design.hpp"
#include "gwlp/kernels.hpp"
#include "gwlp/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace gwlp {

/// Coefficient c_alpha of the counting function, kept as the level counts of
/// X^alpha over #D. The complex value is a derived view.
struct Coefficient {
    LevelCounts counts;
    std::int64_t denominator = 1;  // #D

    /// (1/#D) * sum_h n_{(t-h) mod t} * omega_h
    std::complex<double> value() const;
    double real() const { return value().real(); }
    double imag() const { return value().imag(); }
};

/// Builds c_alpha from level counts.
Coefficient coefficient_from_counts(const Fraction& fraction, const Exponent& alpha);

/// Brute-force oracle: (1/#D) * sum over the multiset of exp(-2*pi*i*<alpha, zeta>).
std::complex<double> coefficient_direct(const Fraction& fraction, const Exponent& alpha);

/// |c_alpha - sum_beta c_beta c_[alpha-beta]| < tolerance.
/// Throws ValidationError unless the fraction is single replicate.
bool check_coefficient_convolution(const Fraction& fraction, const Exponent& alpha, double tolerance = 1e-9);

/// Aberration of one term. `exact` is set when every cos(2*pi*k/t) is rational,
/// i.e. t in {1, 2, 3, 4, 6}.
struct AberrationValue {
    std::optional<Rational> exact;
    double approx = 0.0;
    int t = 1;
};

struct MeanAberrationValue {
    Rational exact;
    double approx() const { return to_double(exact); }
    friend bool operator==(const MeanAberrationValue&, const MeanAberrationValue&) = default;
};

/// True when cos(2*pi*k/t) is rational for every k.
bool has_rational_cosines(int t) noexcept;

AberrationValue aberration(const LevelCounts& counts);
/// Permutation-averaged aberration: (1/n^2) (1/(t-1)) sum_{i<j} (n_i - n_j)^2.
/// Zero when t = 1.
MeanAberrationValue mean_aberration(const LevelCounts& counts);
/// Average of aberration() over all t! orderings of the counts. Throws
/// ValidationError for t > 8.
AberrationValue mean_aberration_oracle(const LevelCounts& counts);
/// Population variance of the counts, sum n_i^2 / t - n^2 / t^2.
Rational counts_variance(const LevelCounts& counts);

enum class GwlpMode { exact, approximate };

/// (A_1, ..., A_m). `exact` is filled only in exact mode; `approx` always.
struct GWLPVector {
    GwlpMode mode = GwlpMode::exact;
    std::vector<Rational> exact;
    std::vector<double> approx;

    std::size_t size() const noexcept { return approx.size(); }
};

/// A_j = sum of a_alpha over exponents of order j. The sum is rational even
/// when single aberrations are not; it is evaluated exactly in Z[zeta_D],
/// falling back to approximate mode only on int64 overflow.
GWLPVector gwlp_classic(const Fraction& fraction, Execution exec = Execution::parallel);
/// A_j = sum of mean aberrations over exponents of order j. Only valid for
/// symmetric s^m designs with s prime; throws ValidationError otherwise.
GWLPVector gwlp_mean(const Fraction& fraction, Execution exec = Execution::parallel);

enum class GmaOrder { better, worse, equal };

/// Generalized minimum aberration: a is better when it is smaller at the first
/// differing entry. Exact vectors compare exactly, anything else with a 1e-9
/// per-entry tolerance.
GmaOrder gma_compare(const GWLPVector& a, const GWLPVector& b);
inline constexpr double kGmaTolerance = 1e-9;

struct AberrationDistribution {
    int order = 0;
    std::map<Rational, std::int64_t> histogram;

    std::int64_t total() const;
    /// sum of value * count
    Rational weighted_sum() const;
};

/// Histogram of mean aberrations over all exponents of the given order.
AberrationDistribution aberration_distribution(const Fraction& fraction, int order,
                                               Execution exec = Execution::parallel);
/// Same, reusing a precomputed level_count_table.
AberrationDistribution aberration_distribution(const DesignSpec& design, const std::vector<LevelCounts>& table,
                                               int order);

}  // namespace gwlp
