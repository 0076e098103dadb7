#pragma once

#include "gwlp/aberration.hpp"
#include "gwlp/count_algebra.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwlp {

inline constexpr int kDefaultDigits = 4;

/// "0", "4", or "1/12 (0.0833)".
std::string format_value(const Rational& value, int digits = kDefaultDigits);
/// "(0, 0, 4)"; exact entries as p/q, approximate ones with 10 significant digits.
std::string format_gwlp(const GWLPVector& gwlp);

struct Report {
    DesignSpec design;
    std::int64_t runs = 0;
    bool single_replicate = true;
    GWLPVector gwlp;
    std::string gwlp_route;  // "mean" or "classic"
    std::map<int, AberrationDistribution> distributions;
    std::vector<Coefficient> coefficients;
    std::optional<AdmissibilityReport> admissibility;
};

/// Analyzes a fraction: GWLP by the mean route when the design allows it,
/// otherwise (or when forced) by the classic route, plus the distributions of
/// the requested orders.
Report build_report(const Fraction& fraction, const std::vector<int>& orders, bool force_classic = false);

/// Rows "value : count", ascending by value.
std::string render_distribution_table(const AberrationDistribution& dist, int digits = kDefaultDigits);
/// Header "value_exact,value_decimal,count".
std::string render_distribution_csv(const AberrationDistribution& dist, int digits = kDefaultDigits);
/// Several distributions of one order side by side, one column per label.
std::string render_distributions_side_by_side(const std::vector<std::string>& labels,
                                              const std::vector<AberrationDistribution>& dists,
                                              int digits = kDefaultDigits);

/// {"design": ..., "gwlp": ..., "distributions": {...}}; rationals as "p/q" strings.
nlohmann::json report_to_json(const Report& report, int digits = kDefaultDigits);

}  // namespace gwlp
