#pragma once

// Convolution identities among the level counts of all terms of a single
// replicate fraction of a symmetric s^m design with s prime. For each alpha,
//
//   r_{alpha,k} = #D n_{alpha,k} - sum_beta sum_i n_{beta,i} n_{[alpha-beta],[k-i]}
//
// must not depend on k. A family of counts is admissible when every alpha
// passes. Families may be partial: counts left unspecified are unknowns, and
// an equation is checked only when its value does not depend on them.

#include "gwlp/design.hpp"
#include "gwlp/kernels.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gwlp {

using Counts = std::vector<std::int64_t>;

/// Thrown when an enumeration would visit more candidates than allowed.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CountFamily {
  public:
    /// Partial family with only the zero exponent set, to (n, 0, ..., 0).
    /// Throws ValidationError unless the design is symmetric s^m, s prime, and n >= 1.
    CountFamily(DesignSpec design, std::int64_t runs);

    /// Sets n_alpha and, by conjugate symmetry, n_[-alpha] (its counts read
    /// backwards with index 0 fixed). Throws ValidationError on a wrong
    /// length, negative entries, a sum other than n, or a conflict with
    /// counts already present.
    void set(const Exponent& alpha, Counts counts);

    const DesignSpec& design() const noexcept { return design_; }
    std::int64_t runs() const noexcept { return runs_; }
    int levels() const noexcept { return s_; }

    bool is_known(const Exponent& alpha) const;
    bool is_known(std::int64_t index) const { return known_[static_cast<std::size_t>(index)] != 0; }
    /// Empty when alpha is still unknown.
    std::optional<Counts> counts(const Exponent& alpha) const;
    bool is_complete() const;

    /// The family alpha -> n_[-alpha]. Admissibility is invariant under it.
    CountFamily conjugate_image() const;

    /// Flat storage: counts of lattice index i occupy [i*s, (i+1)*s).
    const std::vector<std::int64_t>& flat() const noexcept { return values_; }

    friend bool operator==(const CountFamily&, const CountFamily&) = default;

  private:
    void store(std::int64_t index, const Counts& counts);

    DesignSpec design_;
    std::int64_t runs_ = 0;
    int s_ = 0;
    std::vector<std::int64_t> values_;
    std::vector<char> known_;
};

/// Reverses counts with index 0 fixed: out[h] = in[(t - h) mod t].
Counts conjugate_counts(const Counts& counts);

struct ResidualVector {
    Exponent alpha;
    std::vector<std::int64_t> residuals;

    bool all_equal() const noexcept;
    friend bool operator==(const ResidualVector&, const ResidualVector&) = default;
};

/// r_{alpha,0..s-1}, or nothing when the value depends on unknown counts.
std::optional<ResidualVector> try_residuals(const CountFamily& family, const Exponent& alpha);
/// Same, throwing ValidationError when undetermined.
ResidualVector residuals(const CountFamily& family, const Exponent& alpha);

/// Residuals of every exponent, lattice order. Undetermined entries are empty.
std::vector<std::optional<ResidualVector>> residual_table(const CountFamily& family,
                                                          Execution exec = Execution::parallel);

struct AdmissibilityReport {
    bool admissible = true;
    /// Exponents whose residuals differ, lattice order.
    std::vector<ResidualVector> violations;
    std::int64_t checked = 0;
    /// Equations left unchecked because they involve unknown counts.
    std::int64_t skipped = 0;
};

AdmissibilityReport is_admissible(const CountFamily& family, Execution exec = Execution::parallel);

/// Level counts of every term of the fraction. Throws ValidationError unless
/// the design is symmetric with a prime number of levels.
CountFamily family_from_fraction(const Fraction& fraction, Execution exec = Execution::parallel);

/// All terms of order 1..strength balanced at n/s per level, the rest unknown.
/// Throws ValidationError unless s divides n.
CountFamily strength_family(const DesignSpec& design, std::int64_t runs, int strength);

struct EnumerationOptions {
    std::int64_t budget = 10'000'000;
    Execution exec = Execution::parallel;
};

/// Number of ways to write n as an ordered sum of `parts` nonnegative integers.
std::int64_t composition_count(std::int64_t n, int parts);
/// All compositions of n into `parts` nonnegative parts, colexicographic order.
std::vector<Counts> compositions(std::int64_t n, int parts);

/// Completes `fixed` over the free exponents (and their conjugates) in every
/// admissible way. Results follow candidate order: conjugate classes in the
/// order first listed, each ranging over compositions colexicographically,
/// last class fastest. Throws ValidationError when a free exponent is zero or
/// already fixed, BudgetExceeded when the candidate count passes the budget.
std::vector<CountFamily> enumerate_admissible(const CountFamily& fixed, const std::vector<Exponent>& free,
                                              const EnumerationOptions& options = {});

}  // namespace gwlp
