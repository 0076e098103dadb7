#include "gwlp/report.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <set>

namespace gwlp {

std::string format_value(const Rational& value, int digits) {
    if (value.denominator() == 1) return to_string(value);
    return fmt::format("{} ({})", to_string(value), to_decimal(value, digits));
}

std::string format_gwlp(const GWLPVector& gwlp) {
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < gwlp.size(); ++j) {
        if (gwlp.mode == GwlpMode::exact) {
            parts.push_back(to_string(gwlp.exact[j]));
        } else {
            // snap rounding noise to zero
            const double v = std::abs(gwlp.approx[j]) < 1e-12 ? 0.0 : gwlp.approx[j];
            parts.push_back(fmt::format("{:.10g}", v));
        }
    }
    return fmt::format("({})", fmt::join(parts, ", "));
}

Report build_report(const Fraction& fraction, const std::vector<int>& orders, bool force_classic) {
    const auto& design = fraction.design();
    Report report{design, fraction.size(), fraction.single_replicate(), {}, {}, {}, {}, {}};
    const auto table = level_count_table(fraction);
    if (design.is_symmetric_prime() && !force_classic) {
        report.gwlp = gwlp_mean(fraction);
        report.gwlp_route = "mean";
    } else {
        report.gwlp = gwlp_classic(fraction);
        report.gwlp_route = "classic";
    }
    for (int order : orders) report.distributions.emplace(order, aberration_distribution(design, table, order));
    return report;
}

std::string render_distribution_table(const AberrationDistribution& dist, int digits) {
    std::vector<std::string> labels;
    std::size_t width = 0;
    for (const auto& [value, count] : dist.histogram) {
        labels.push_back(format_value(value, digits));
        width = std::max(width, labels.back().size());
    }
    std::string out;
    std::size_t i = 0;
    for (const auto& [value, count] : dist.histogram)
        out += fmt::format("{:<{}} : {}\n", labels[i++], width, count);
    return out;
}

std::string render_distribution_csv(const AberrationDistribution& dist, int digits) {
    std::string out = "value_exact,value_decimal,count\n";
    for (const auto& [value, count] : dist.histogram)
        out += fmt::format("{},{},{}\n", to_string(value), to_decimal(value, digits), count);
    return out;
}

std::string render_distributions_side_by_side(const std::vector<std::string>& labels,
                                              const std::vector<AberrationDistribution>& dists, int digits) {
    std::set<Rational> values;
    for (const auto& d : dists)
        for (const auto& [value, count] : d.histogram) values.insert(value);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"mean aberration"});
    for (const auto& l : labels) rows.back().push_back(l);
    for (const auto& v : values) {
        rows.push_back({format_value(v, digits)});
        for (const auto& d : dists) {
            auto it = d.histogram.find(v);
            rows.back().push_back(fmt::format("{}", it == d.histogram.end() ? 0 : it->second));
        }
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += fmt::format("{:<{}}", rows[i][0], width[0]);
        for (std::size_t c = 1; c < rows[i].size(); ++c) out += fmt::format(" | {:>{}}", rows[i][c], width[c]);
        out += '\n';
        if (i == 0) {
            out += std::string(width[0], '-');
            for (std::size_t c = 1; c < width.size(); ++c) out += "-+-" + std::string(width[c], '-');
            out += '\n';
        }
    }
    return out;
}

nlohmann::json report_to_json(const Report& report, int digits) {
    using nlohmann::json;
    json out;
    out["design"] = {{"levels", report.design.levels()},
                     {"factors", report.design.factors()},
                     {"runs", report.runs},
                     {"cardinality", report.design.cardinality()},
                     {"single_replicate", report.single_replicate}};

    json values = json::array();
    for (std::size_t j = 0; j < report.gwlp.size(); ++j) {
        if (report.gwlp.mode == GwlpMode::exact)
            values.push_back(to_string(report.gwlp.exact[j]));
        else
            values.push_back(report.gwlp.approx[j]);
    }
    out["gwlp"] = {{"mode", report.gwlp.mode == GwlpMode::exact ? "exact" : "approximate"},
                   {"route", report.gwlp_route},
                   {"values", values}};

    json dists = json::object();
    for (const auto& [order, dist] : report.distributions) {
        json rows = json::array();
        for (const auto& [value, count] : dist.histogram)
            rows.push_back({{"value", to_string(value)}, {"decimal", to_decimal(value, digits)}, {"count", count}});
        dists[std::to_string(order)] = {{"total", dist.total()}, {"histogram", rows}};
    }
    out["distributions"] = dists;

    if (!report.coefficients.empty()) {
        json coeffs = json::array();
        for (const auto& c : report.coefficients) {
            const auto v = c.value();
            coeffs.push_back({{"alpha", c.counts.alpha.entries()},
                              {"t", c.counts.t},
                              {"counts", c.counts.counts},
                              {"real", v.real()},
                              {"imag", v.imag()}});
        }
        out["coefficients"] = coeffs;
    }
    if (report.admissibility) {
        json violations = json::array();
        for (const auto& r : report.admissibility->violations)
            violations.push_back({{"alpha", r.alpha.entries()}, {"residuals", r.residuals}});
        out["admissibility"] = {{"admissible", report.admissibility->admissible},
                                {"checked", report.admissibility->checked},
                                {"skipped", report.admissibility->skipped},
                                {"violations", violations}};
    }
    return out;
}

}  // namespace gwlp
