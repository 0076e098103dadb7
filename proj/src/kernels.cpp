#include "gwlp/kernels.hpp"

#include <omp.h>

namespace gwlp {

namespace {

std::vector<LevelCounts> table_serial(const Fraction& fraction) {
    std::vector<LevelCounts> table;
    table.reserve(static_cast<std::size_t>(fraction.design().lattice_size()));
    for (const auto& alpha : all_exponents(fraction.design())) table.push_back(level_counts(fraction, alpha));
    return table;
}

// Flattened version of eval_term: each point becomes m residues pre-scaled by
// D/s_j, so X^alpha(zeta) is one dot product mod D.
std::vector<LevelCounts> table_parallel(const Fraction& fraction) {
    const auto& design = fraction.design();
    const std::size_t m = design.factors();
    const std::int64_t D = design.levels_lcm();
    const std::int64_t size = design.lattice_size();

    std::vector<std::int64_t> scaled;
    std::vector<std::int64_t> mult;
    scaled.reserve(fraction.support_size() * m);
    for (const auto& [point, r] : fraction.entries()) {
        for (std::size_t j = 0; j < m; ++j) scaled.push_back(point[j] * (D / design.levels(j)));
        mult.push_back(r);
    }
    const std::size_t npoints = mult.size();

    std::vector<LevelCounts> table(static_cast<std::size_t>(size));
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < size; ++idx) {
        auto& out = table[static_cast<std::size_t>(idx)];
        out.alpha = exponent_at(design, idx);
        out.t = term_levels(design, out.alpha);
        out.counts.assign(static_cast<std::size_t>(out.t), 0);
        const std::int64_t step = D / out.t;
        const auto& a = out.alpha.entries();
        for (std::size_t p = 0; p < npoints; ++p) {
            const std::int64_t* z = scaled.data() + p * m;
            std::int64_t e = 0;
            for (std::size_t j = 0; j < m; ++j) e += a[j] * z[j];
            out.counts[static_cast<std::size_t>((e % D) / step)] += mult[p];
        }
    }
    return table;
}

}  // namespace

std::vector<LevelCounts> level_count_table(const Fraction& fraction, Execution exec) {
    return exec == Execution::serial ? table_serial(fraction) : table_parallel(fraction);
}

}  // namespace gwlp
