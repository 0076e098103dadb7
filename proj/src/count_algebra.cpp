#include "gwlp/count_algebra.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <numeric>
#include <omp.h>

namespace gwlp {

CountFamily::CountFamily(DesignSpec design, std::int64_t runs) : design_(std::move(design)), runs_(runs) {
    if (!design_.is_symmetric_prime())
        throw ValidationError(fmt::format("count convolution needs a symmetric s^m design with s prime, got levels ({})",
                                          fmt::join(design_.levels(), ",")));
    if (runs_ < 1) throw ValidationError("run count must be positive");
    s_ = design_.levels(0);
    values_.assign(static_cast<std::size_t>(design_.lattice_size() * s_), 0);
    known_.assign(static_cast<std::size_t>(design_.lattice_size()), 0);
    Counts zero(static_cast<std::size_t>(s_), 0);
    zero[0] = runs_;
    store(0, zero);
}

void CountFamily::store(std::int64_t index, const Counts& counts) {
    std::copy(counts.begin(), counts.end(), values_.begin() + index * s_);
    known_[static_cast<std::size_t>(index)] = 1;
}

Counts conjugate_counts(const Counts& counts) {
    const std::size_t t = counts.size();
    Counts out(t);
    for (std::size_t h = 0; h < t; ++h) out[h] = counts[(t - h) % t];
    return out;
}

void CountFamily::set(const Exponent& alpha, Counts counts) {
    validate_exponent(design_, alpha);
    if (counts.size() != static_cast<std::size_t>(s_))
        throw ValidationError(fmt::format("counts for ({}) need {} entries, got {}", fmt::join(alpha.entries(), ","),
                                          s_, counts.size()));
    if (std::any_of(counts.begin(), counts.end(), [](auto c) { return c < 0; }))
        throw ValidationError("counts must be nonnegative");
    if (std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) != runs_)
        throw ValidationError(fmt::format("counts ({}) for ({}) do not sum to n = {}", fmt::join(counts, ","),
                                          fmt::join(alpha.entries(), ","), runs_));
    const auto conj = exponent_negate(design_, alpha);
    const std::pair<Exponent, Counts> targets[] = {{alpha, counts}, {conj, conjugate_counts(counts)}};
    for (const auto& [beta, c] : targets) {
        const auto existing = this->counts(beta);
        if (existing && *existing != c)
            throw ValidationError(fmt::format("counts ({}) for ({}) conflict with ({}) already set",
                                              fmt::join(c, ","), fmt::join(beta.entries(), ","),
                                              fmt::join(*existing, ",")));
    }
    for (const auto& [beta, c] : targets) store(lattice_index(design_, beta), c);
}

bool CountFamily::is_known(const Exponent& alpha) const {
    validate_exponent(design_, alpha);
    return is_known(lattice_index(design_, alpha));
}

std::optional<Counts> CountFamily::counts(const Exponent& alpha) const {
    if (!is_known(alpha)) return std::nullopt;
    const auto begin = values_.begin() + lattice_index(design_, alpha) * s_;
    return Counts(begin, begin + s_);
}

bool CountFamily::is_complete() const {
    return std::all_of(known_.begin(), known_.end(), [](char k) { return k != 0; });
}

CountFamily CountFamily::conjugate_image() const {
    CountFamily out(design_, runs_);
    for (std::int64_t i = 0; i < design_.lattice_size(); ++i) {
        const auto alpha = exponent_at(design_, i);
        if (auto c = counts(exponent_negate(design_, alpha))) out.set(alpha, *c);
    }
    return out;
}

bool ResidualVector::all_equal() const noexcept {
    return std::adjacent_find(residuals.begin(), residuals.end(), std::not_equal_to<>{}) == residuals.end();
}

namespace {

bool is_balanced(const Counts& c, std::int64_t runs) {
    const auto s = static_cast<std::int64_t>(c.size());
    return runs % s == 0 && std::all_of(c.begin(), c.end(), [&](auto v) { return v == runs / s; });
}

// Direct evaluation on Exponent objects; reference for the flat kernel.
std::optional<ResidualVector> residuals_reference(const CountFamily& family, const Exponent& alpha) {
    const auto& design = family.design();
    const auto n_alpha = family.counts(alpha);
    if (!n_alpha) return std::nullopt;
    const int s = family.levels();
    const std::int64_t n = family.runs();
    std::vector<std::int64_t> conv(static_cast<std::size_t>(s), 0);
    for (const auto& beta : all_exponents(design)) {
        const auto a = family.counts(beta);
        const auto b = family.counts(exponent_diff(design, alpha, beta));
        if (a && b) {
            for (int k = 0; k < s; ++k)
                for (int i = 0; i < s; ++i)
                    conv[static_cast<std::size_t>(k)] +=
                        (*a)[static_cast<std::size_t>(i)] * (*b)[static_cast<std::size_t>(((k - i) % s + s) % s)];
        } else if ((a && is_balanced(*a, n)) || (b && is_balanced(*b, n))) {
            // a balanced factor spreads the unknown one evenly: n/s * n for every k
            for (auto& v : conv) v += n / s * n;
        } else {
            return std::nullopt;
        }
    }
    ResidualVector out{alpha, {}};
    for (int k = 0; k < s; ++k)
        out.residuals.push_back(design.cardinality() * (*n_alpha)[static_cast<std::size_t>(k)] -
                                conv[static_cast<std::size_t>(k)]);
    return out;
}

// Flat kernel over precomputed lattice digits.
class ResidualKernel {
  public:
    explicit ResidualKernel(const CountFamily& family)
        : family_(family),
          s_(family.levels()),
          m_(family.design().factors()),
          size_(family.design().lattice_size()),
          digits_(static_cast<std::size_t>(size_) * m_),
          balanced_(static_cast<std::size_t>(size_), 0) {
        for (std::int64_t i = 0; i < size_; ++i) {
            auto rest = i;
            for (std::size_t j = m_; j-- > 0;) {
                digits_[static_cast<std::size_t>(i) * m_ + j] = static_cast<int>(rest % s_);
                rest /= s_;
            }
            if (family.is_known(i)) {
                const auto* c = row(i);
                balanced_[static_cast<std::size_t>(i)] =
                    family.runs() % s_ == 0 && std::all_of(c, c + s_, [&](auto v) { return v == family.runs() / s_; });
            }
        }
    }

    // Writes s residuals to out; false when undetermined.
    bool evaluate(std::int64_t alpha, std::int64_t* out) const {
        if (!family_.is_known(alpha)) return false;
        const std::int64_t n = family_.runs();
        std::fill(out, out + s_, 0);
        const int* da = digits_.data() + alpha * static_cast<std::int64_t>(m_);
        for (std::int64_t beta = 0; beta < size_; ++beta) {
            const int* db = digits_.data() + beta * static_cast<std::int64_t>(m_);
            std::int64_t diff = 0;
            for (std::size_t j = 0; j < m_; ++j) diff = diff * s_ + (da[j] - db[j] + s_) % s_;
            const bool ka = family_.is_known(beta);
            const bool kb = family_.is_known(diff);
            if (ka && kb) {
                const auto* a = row(beta);
                const auto* b = row(diff);
                for (int i = 0; i < s_; ++i) {
                    if (a[i] == 0) continue;
                    for (int k = 0; k < s_; ++k) out[k] += a[i] * b[(k - i + s_) % s_];
                }
            } else if ((ka && balanced_[static_cast<std::size_t>(beta)]) ||
                       (kb && balanced_[static_cast<std::size_t>(diff)])) {
                for (int k = 0; k < s_; ++k) out[k] += n / s_ * n;
            } else {
                return false;
            }
        }
        const auto card = family_.design().cardinality();
        const auto* own = row(alpha);
        for (int k = 0; k < s_; ++k) out[k] = card * own[k] - out[k];
        return true;
    }

    std::int64_t size() const noexcept { return size_; }
    int levels() const noexcept { return s_; }

  private:
    const std::int64_t* row(std::int64_t i) const { return family_.flat().data() + i * s_; }

    const CountFamily& family_;
    int s_;
    std::size_t m_;
    std::int64_t size_;
    std::vector<int> digits_;
    std::vector<char> balanced_;
};

std::optional<ResidualVector> kernel_entry(const ResidualKernel& kernel, const CountFamily& family,
                                           std::int64_t alpha, std::vector<std::int64_t>& scratch) {
    if (!kernel.evaluate(alpha, scratch.data())) return std::nullopt;
    return ResidualVector{exponent_at(family.design(), alpha), scratch};
}

}  // namespace

std::optional<ResidualVector> try_residuals(const CountFamily& family, const Exponent& alpha) {
    validate_exponent(family.design(), alpha);
    ResidualKernel kernel(family);
    std::vector<std::int64_t> scratch(static_cast<std::size_t>(family.levels()));
    return kernel_entry(kernel, family, lattice_index(family.design(), alpha), scratch);
}

ResidualVector residuals(const CountFamily& family, const Exponent& alpha) {
    auto r = try_residuals(family, alpha);
    if (!r)
        throw ValidationError(
            fmt::format("residuals of ({}) depend on unknown counts", fmt::join(alpha.entries(), ",")));
    return *std::move(r);
}

std::vector<std::optional<ResidualVector>> residual_table(const CountFamily& family, Execution exec) {
    const auto size = family.design().lattice_size();
    std::vector<std::optional<ResidualVector>> table(static_cast<std::size_t>(size));
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < size; ++i)
            table[static_cast<std::size_t>(i)] = residuals_reference(family, exponent_at(family.design(), i));
        return table;
    }
    const ResidualKernel kernel(family);
#pragma omp parallel
    {
        std::vector<std::int64_t> scratch(static_cast<std::size_t>(family.levels()));
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < size; ++i)
            table[static_cast<std::size_t>(i)] = kernel_entry(kernel, family, i, scratch);
    }
    return table;
}

namespace {

AdmissibilityReport summarize(std::vector<std::optional<ResidualVector>> table) {
    AdmissibilityReport report;
    for (auto& r : table) {
        if (!r) {
            ++report.skipped;
            continue;
        }
        ++report.checked;
        if (!r->all_equal()) {
            report.admissible = false;
            report.violations.push_back(*std::move(r));
        }
    }
    return report;
}

// Single-threaded flat check with early exit, used inside parallel loops.
bool admissible_fast(const CountFamily& family) {
    const ResidualKernel kernel(family);
    std::vector<std::int64_t> r(static_cast<std::size_t>(family.levels()));
    for (std::int64_t i = 0; i < kernel.size(); ++i)
        if (kernel.evaluate(i, r.data()) && std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>{}) != r.end())
            return false;
    return true;
}

}  // namespace

AdmissibilityReport is_admissible(const CountFamily& family, Execution exec) {
    return summarize(residual_table(family, exec));
}

CountFamily family_from_fraction(const Fraction& fraction, Execution exec) {
    CountFamily family(fraction.design(), fraction.size());
    for (const auto& counts : level_count_table(fraction, exec)) {
        if (counts.alpha.is_zero()) continue;
        if (!family.is_known(counts.alpha)) family.set(counts.alpha, counts.counts);
    }
    return family;
}

CountFamily strength_family(const DesignSpec& design, std::int64_t runs, int strength) {
    CountFamily family(design, runs);
    const int s = family.levels();
    if (strength < 0 || static_cast<std::size_t>(strength) > design.factors())
        throw ValidationError(fmt::format("strength {} outside [0, {}]", strength, design.factors()));
    if (strength > 0 && runs % s != 0)
        throw ValidationError(fmt::format("strength {} needs n divisible by s = {}, got n = {}", strength, s, runs));
    const Counts balanced(static_cast<std::size_t>(s), runs / s);
    for (const auto& alpha : all_exponents(design)) {
        const int order = alpha.order();
        if (order >= 1 && order <= strength && !family.is_known(alpha)) family.set(alpha, balanced);
    }
    return family;
}

std::int64_t composition_count(std::int64_t n, int parts) {
    // C(n + parts - 1, parts - 1), saturating
    if (parts < 1) return 0;
    __extension__ __int128 acc = 1;
    for (int i = 1; i < parts; ++i) {
        acc = acc * (n + i) / i;
        if (acc > INT64_MAX) return INT64_MAX;
    }
    return static_cast<std::int64_t>(acc);
}

std::vector<Counts> compositions(std::int64_t n, int parts) {
    // colex: compare from the last part; generate by increasing the tail
    std::vector<Counts> out;
    Counts current(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, std::int64_t remaining) -> void {
        if (pos == 0) {
            current[0] = remaining;
            out.push_back(current);
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos - 1, remaining - v);
        }
    };
    rec(rec, parts - 1, n);
    return out;
}

std::vector<CountFamily> enumerate_admissible(const CountFamily& fixed, const std::vector<Exponent>& free,
                                              const EnumerationOptions& options) {
    const auto& design = fixed.design();
    // one representative per conjugate class, in first-listed order
    std::vector<Exponent> classes;
    for (const auto& alpha : free) {
        validate_exponent(design, alpha);
        if (alpha.is_zero()) throw ValidationError("the zero exponent cannot be free; its counts are (n, 0, ..., 0)");
        if (fixed.is_known(alpha))
            throw ValidationError(fmt::format("free exponent ({}) is already fixed (directly or via its conjugate)",
                                              fmt::join(alpha.entries(), ",")));
        const auto conj = exponent_negate(design, alpha);
        if (std::find(classes.begin(), classes.end(), alpha) == classes.end() &&
            std::find(classes.begin(), classes.end(), conj) == classes.end())
            classes.push_back(alpha);
    }

    const auto choices = compositions(fixed.runs(), fixed.levels());
    const auto per_class = static_cast<std::int64_t>(choices.size());
    std::int64_t total = 1;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (total > options.budget / per_class)
            throw BudgetExceeded(fmt::format("{} free conjugate classes with {} count vectors each exceed the budget "
                                             "of {} candidates",
                                             classes.size(), per_class, options.budget));
        total *= per_class;
    }

    auto candidate = [&](std::int64_t index) {
        CountFamily family = fixed;
        for (std::size_t c = classes.size(); c-- > 0;) {
            family.set(classes[c], choices[static_cast<std::size_t>(index % per_class)]);
            index /= per_class;
        }
        return family;
    };

    std::vector<std::pair<std::int64_t, CountFamily>> found;
    if (options.exec == Execution::serial) {
        for (std::int64_t i = 0; i < total; ++i) {
            auto family = candidate(i);
            if (is_admissible(family, Execution::serial).admissible) found.emplace_back(i, std::move(family));
        }
    } else {
#pragma omp parallel
        {
            std::vector<std::pair<std::int64_t, CountFamily>> local;
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < total; ++i) {
                auto family = candidate(i);
                if (admissible_fast(family)) local.emplace_back(i, std::move(family));
            }
#pragma omp critical
            found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::vector<CountFamily> out;
    out.reserve(found.size());
    for (auto& [i, family] : found) out.push_back(std::move(family));
    return out;
}

}  // namespace gwlp
