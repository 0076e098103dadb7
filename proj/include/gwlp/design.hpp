#pragma once

// Full factorial designs, exponent lattices and fractions stored as multisets
// of points. Levels use the integer coding k in [0, s); the complex coding
// exp(2*pi*i*k/s) is implied and never stored.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwlp {

/// Rejected user input: bad levels, out-of-range points, malformed files.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant. Never caused by valid input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class DesignSpec {
  public:
    /// Throws ValidationError on an empty list or any level below 2.
    explicit DesignSpec(std::vector<int> levels);

    const std::vector<int>& levels() const noexcept { return levels_; }
    int levels(std::size_t factor) const { return levels_.at(factor); }
    std::size_t factors() const noexcept { return levels_.size(); }
    /// #D, the number of points of the full factorial.
    std::int64_t cardinality() const noexcept { return cardinality_; }
    /// lcm(s_1, ..., s_m); every term takes values among the lcm-th roots of unity.
    std::int64_t levels_lcm() const noexcept { return lcm_; }

    bool is_symmetric() const noexcept;
    bool is_symmetric_prime() const noexcept;

    /// The exponent lattice has the same size as the design.
    std::int64_t lattice_size() const noexcept { return cardinality_; }

    friend bool operator==(const DesignSpec&, const DesignSpec&) = default;

  private:
    std::vector<int> levels_;
    std::int64_t cardinality_ = 1;
    std::int64_t lcm_ = 1;
};

DesignSpec make_design(std::vector<int> levels);

bool is_prime(int value) noexcept;

/// A point of the exponent lattice Z_{s_1} x ... x Z_{s_m}, indexing the term X^alpha.
class Exponent {
  public:
    Exponent() = default;
    explicit Exponent(std::vector<int> entries) : entries_(std::move(entries)) {}

    const std::vector<int>& entries() const noexcept { return entries_; }
    int operator[](std::size_t j) const { return entries_[j]; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Number of nonzero entries, i.e. the interaction order.
    int order() const noexcept;
    bool is_zero() const noexcept { return order() == 0; }

    friend auto operator<=>(const Exponent&, const Exponent&) = default;

  private:
    std::vector<int> entries_;
};

/// A design point in integer coding.
class Point {
  public:
    Point() = default;
    explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}

    const std::vector<int>& coords() const noexcept { return coords_; }
    int operator[](std::size_t j) const { return coords_[j]; }
    std::size_t size() const noexcept { return coords_.size(); }

    friend auto operator<=>(const Point&, const Point&) = default;

  private:
    std::vector<int> coords_;
};

/// Throws ValidationError unless alpha has one entry per factor, each in [0, s_j).
void validate_exponent(const DesignSpec& design, const Exponent& alpha);
void validate_point(const DesignSpec& design, const Point& point);

/// Mixed-radix position of alpha in the lexicographic scan of the lattice
/// (last factor varies fastest).
std::int64_t lattice_index(const DesignSpec& design, const Exponent& alpha);
Exponent exponent_at(const DesignSpec& design, std::int64_t index);
/// Every exponent, lexicographic order.
std::vector<Exponent> all_exponents(const DesignSpec& design);
/// Every exponent with exactly `order` nonzero entries, lexicographic order.
std::vector<Exponent> exponents_of_order(const DesignSpec& design, int order);
/// Sum over all order-sized factor subsets of prod (s_j - 1).
std::int64_t count_exponents_of_order(const DesignSpec& design, int order);

/// t_alpha = lcm_j s_j / gcd(alpha_j, s_j), with gcd(0, s) = s.
int term_levels(const DesignSpec& design, const Exponent& alpha);

/// Index h with X^alpha(zeta) = omega_h, omega_h a t_alpha-th root of unity.
int eval_term(const DesignSpec& design, const Exponent& alpha, const Point& point);

/// [alpha - beta], componentwise mod s_j.
Exponent exponent_diff(const DesignSpec& design, const Exponent& alpha, const Exponent& beta);
/// [h * alpha], componentwise mod s_j.
Exponent exponent_scale(const DesignSpec& design, int h, const Exponent& alpha);
/// [-alpha].
Exponent exponent_negate(const DesignSpec& design, const Exponent& alpha);

/// A multiset of design points. Points are kept in lexicographic order with
/// strictly positive multiplicities.
class Fraction {
  public:
    using Entry = std::pair<Point, std::int64_t>;

    /// Duplicate points are merged into multiplicities. Throws ValidationError
    /// on invalid points or an empty list.
    Fraction(DesignSpec design, const std::vector<Point>& points);
    Fraction(DesignSpec design, std::vector<Entry> entries);

    const DesignSpec& design() const noexcept { return design_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    /// Number of runs, counting multiplicity.
    std::int64_t size() const noexcept { return size_; }
    /// Number of distinct points.
    std::size_t support_size() const noexcept { return entries_.size(); }
    bool single_replicate() const noexcept { return single_replicate_; }
    std::int64_t multiplicity(const Point& point) const;

    /// The full factorial, every point once.
    static Fraction full_factorial(const DesignSpec& design);

    friend bool operator==(const Fraction&, const Fraction&) = default;

  private:
    void finish();

    DesignSpec design_;
    std::vector<Entry> entries_;
    std::int64_t size_ = 0;
    bool single_replicate_ = true;
};

/// Occurrences of each root omega_0 .. omega_{t-1} among X^alpha over a fraction.
struct LevelCounts {
    Exponent alpha;
    int t = 1;
    std::vector<std::int64_t> counts;

    std::int64_t total() const noexcept;
    friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

LevelCounts level_counts(const Fraction& fraction, const Exponent& alpha);

}  // namespace gwlp
