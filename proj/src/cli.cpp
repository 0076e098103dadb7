#include "gwlp/cli.hpp"

#include "gwlp/constructions.hpp"
#include "gwlp/fraction_file.hpp"
#include "gwlp/report.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <numeric>
#include <ostream>

namespace gwlp {

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find(',', pos), text.size());
        const std::string field = text.substr(pos, end - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw ValidationError(fmt::format("{}: '{}' is not a comma-separated list of integers", what, text));
        }
        pos = end + 1;
    }
    return out;
}

Exponent parse_exponent(const DesignSpec& design, const std::string& text) {
    Exponent alpha(parse_int_list(text, "exponent"));
    validate_exponent(design, alpha);
    return alpha;
}

Fraction load(const std::string& path, bool require_single_replicate) {
    auto fraction = read_fraction_file(path);
    if (require_single_replicate && !fraction.single_replicate())
        throw ValidationError(fmt::format("{}: duplicate rows found but a single replicate fraction is required", path));
    return fraction;
}

std::string tuple(const std::vector<std::int64_t>& values) { return fmt::format("({})", fmt::join(values, ", ")); }
std::string tuple(const std::vector<int>& values) { return fmt::format("({})", fmt::join(values, ",")); }

struct Options {
    std::string file;
    std::vector<std::string> files;
    bool mean = false;
    bool classic = false;
    int order = 0;
    std::string format = "table";
    int digits = kDefaultDigits;
    std::string alpha;
    bool check_convolution = false;
    bool single_replicate = false;
    std::string levels;
    std::int64_t runs = 0;
    int strength = 0;
    std::vector<std::string> free;
    std::int64_t budget = EnumerationOptions{}.budget;
    std::vector<std::string> words;
    int cyclic = 0;
    std::string square;
    std::string output;
};

int cmd_gwlp(const Options& o, std::ostream& out) {
    const auto fraction = load(o.file, o.single_replicate);
    GWLPVector gwlp;
    std::string route;
    if (o.mean || (!o.classic && fraction.design().is_symmetric_prime())) {
        gwlp = gwlp_mean(fraction);
        route = "mean";
    } else {
        gwlp = gwlp_classic(fraction);
        route = "classic";
    }
    if (o.format == "json") {
        Report report{fraction.design(), fraction.size(), fraction.single_replicate(), gwlp, route, {}, {}, {}};
        out << report_to_json(report, o.digits).dump(2) << '\n';
        return kExitOk;
    }
    out << "A = " << format_gwlp(gwlp) << '\n';
    out << fmt::format("route: {} ({})\n", route, gwlp.mode == GwlpMode::exact ? "exact" : "approximate");
    return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
    const auto fraction = load(o.file, o.single_replicate);
    const auto report = build_report(fraction, {o.order}, o.classic);
    const auto& dist = report.distributions.at(o.order);
    if (o.format == "csv") {
        out << render_distribution_csv(dist, o.digits);
    } else if (o.format == "json") {
        out << report_to_json(report, o.digits).dump(2) << '\n';
    } else {
        out << fmt::format("order {} mean aberrations ({} terms)\n", o.order, dist.total());
        out << render_distribution_table(dist, o.digits);
    }
    return kExitOk;
}

int cmd_coeff(const Options& o, std::ostream& out) {
    const auto fraction = load(o.file, o.single_replicate || o.check_convolution);
    const auto alpha = parse_exponent(fraction.design(), o.alpha);
    const auto coeff = coefficient_from_counts(fraction, alpha);
    const auto a = aberration(coeff.counts);
    const auto abar = mean_aberration(coeff.counts);
    const auto c = coeff.value();
    out << fmt::format("alpha = {}\n", tuple(alpha.entries()));
    out << fmt::format("order = {}\n", alpha.order());
    out << fmt::format("t = {}\n", coeff.counts.t);
    out << fmt::format("counts = {}\n", tuple(coeff.counts.counts));
    out << fmt::format("c_alpha = {:.12g} {} {:.12g}i\n", c.real(), c.imag() < 0 ? '-' : '+', std::abs(c.imag()));
    if (a.exact)
        out << fmt::format("a_alpha = {}\n", format_value(*a.exact, o.digits));
    else
        out << fmt::format("a_alpha ~ {:.12g}\n", a.approx);
    out << fmt::format("mean a_alpha = {}\n", format_value(abar.exact, o.digits));
    if (o.check_convolution)
        out << fmt::format("convolution: {}\n", check_coefficient_convolution(fraction, alpha) ? "holds" : "FAILS");
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    std::vector<Fraction> fractions;
    for (const auto& f : o.files) fractions.push_back(load(f, o.single_replicate));
    const std::size_t m = fractions.front().design().factors();
    for (std::size_t i = 1; i < fractions.size(); ++i)
        if (fractions[i].design().factors() != m)
            throw ValidationError(fmt::format("{} has {} factors but {} has {}", o.files[i],
                                              fractions[i].design().factors(), o.files[0], m));

    std::vector<Report> reports;
    std::vector<int> orders(m);
    std::iota(orders.begin(), orders.end(), 1);
    for (const auto& f : fractions) reports.push_back(build_report(f, orders, o.classic));

    std::size_t width = 0;
    for (const auto& f : o.files) width = std::max(width, f.size());
    out << "GWLP:\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
        out << fmt::format("  {:<{}}  {}\n", o.files[i], width, format_gwlp(reports[i].gwlp));

    std::vector<std::size_t> rank(reports.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
        return gma_compare(reports[a].gwlp, reports[b].gwlp) == GmaOrder::better;
    });
    // groups of GMA-equal designs, in rank order
    std::vector<std::vector<std::size_t>> groups;
    for (auto i : rank) {
        if (!groups.empty() && gma_compare(reports[groups.back().front()].gwlp, reports[i].gwlp) == GmaOrder::equal)
            groups.back().push_back(i);
        else
            groups.push_back({i});
    }

    if (groups.size() == 1) {
        out << "GMA: equal\n";
    } else {
        out << "GMA ranking (best first):\n";
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (auto i : groups[g]) out << fmt::format("  {}. {}\n", g + 1, o.files[i]);
    }
    for (const auto& group : groups) {
        if (group.size() < 2) continue;
        std::vector<std::string> labels;
        for (auto i : group) labels.push_back(o.files[i]);
        out << fmt::format("\nGWLP tie between {}:\n", fmt::join(labels, ", "));
        for (int order : orders) {
            std::vector<AberrationDistribution> dists;
            for (auto i : group) dists.push_back(reports[i].distributions.at(order));
            const bool identical = std::all_of(dists.begin(), dists.end(),
                                               [&](const auto& d) { return d.histogram == dists.front().histogram; });
            out << fmt::format("\norder {} mean aberrations{}\n", order, identical ? " (identical)" : " (differ)");
            out << render_distributions_side_by_side(labels, dists, o.digits);
        }
    }
    return kExitOk;
}

int cmd_admissible(const Options& o, std::ostream& out) {
    const auto fraction = load(o.file, o.single_replicate);
    const auto report = is_admissible(family_from_fraction(fraction));
    if (o.format == "json") {
        Report r{fraction.design(), fraction.size(), fraction.single_replicate(), {}, {}, {}, {}, report};
        auto j = report_to_json(r, o.digits);
        j.erase("gwlp");
        j.erase("distributions");
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << fmt::format("admissible: {}\n", report.admissible ? "yes" : "no");
    out << fmt::format("equations checked: {}\n", report.checked);
    if (!fraction.single_replicate())
        out << "note: the fraction has repeated runs; the identities characterize single replicate fractions\n";
    for (const auto& v : report.violations)
        out << fmt::format("violated at alpha = {}: residuals {}\n", tuple(v.alpha.entries()), tuple(v.residuals));
    return kExitOk;
}

int cmd_enum(const Options& o, std::ostream& out) {
    const DesignSpec design(parse_int_list(o.levels, "--levels"));
    const auto fixed = strength_family(design, o.runs, o.strength);
    std::vector<Exponent> free;
    for (const auto& f : o.free) free.push_back(parse_exponent(design, f));
    const auto found = enumerate_admissible(fixed, free, {o.budget, Execution::parallel});

    // report the listed exponents plus their conjugates, first-listed order
    std::vector<Exponent> shown;
    for (const auto& a : free)
        for (const auto& b : {a, exponent_negate(design, a)})
            if (std::find(shown.begin(), shown.end(), b) == shown.end()) shown.push_back(b);

    out << fmt::format("{} admissible configuration{}\n", found.size(), found.size() == 1 ? "" : "s");
    for (const auto& family : found) {
        std::vector<std::string> parts;
        for (const auto& a : shown) parts.push_back(fmt::format("n{} = {}", tuple(a.entries()), tuple(*family.counts(a))));
        out << "  " << fmt::format("{}", fmt::join(parts, "  ")) << '\n';
    }
    return kExitOk;
}

Word parse_word(const DesignSpec& design, const std::string& text) {
    const auto colon = text.find(':');
    const auto alpha = parse_exponent(design, text.substr(0, colon));
    int level = 0;
    if (colon != std::string::npos) {
        const auto l = parse_int_list(text.substr(colon + 1), "word level");
        if (l.size() != 1) throw ValidationError(fmt::format("word '{}' must look like a1,...,am:h", text));
        level = l.front();
    }
    return {alpha, level};
}

int cmd_make_regular(const Options& o, std::ostream& out) {
    const DesignSpec design(parse_int_list(o.levels, "--levels"));
    std::vector<Word> words;
    std::vector<std::string> described;
    for (const auto& w : o.words) {
        words.push_back(parse_word(design, w));
        described.push_back(fmt::format("X^{} = w_{}", tuple(words.back().alpha.entries()), words.back().level));
    }
    const auto fraction = construct_regular_fraction(design, words);
    write_fraction_file(o.output, fraction, {fmt::format("regular fraction: {}", fmt::join(described, ", "))});
    out << fmt::format("wrote {} runs to {}\n", fraction.size(), o.output);
    return kExitOk;
}

LatinSquare parse_square(const std::string& text) {
    LatinSquare square;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find(';', pos), text.size());
        std::string row = text.substr(pos, end - pos);
        std::replace(row.begin(), row.end(), ' ', ',');
        row.erase(std::unique(row.begin(), row.end(), [](char a, char b) { return a == ',' && b == ','; }), row.end());
        if (!row.empty() && row.front() == ',') row.erase(row.begin());
        if (!row.empty() && row.back() == ',') row.pop_back();
        square.push_back(parse_int_list(row, "--square"));
        pos = end + 1;
    }
    return square;
}

int cmd_make_latin(const Options& o, std::ostream& out) {
    if ((o.cyclic != 0) == !o.square.empty())
        throw CLI::ValidationError("make-latin", "give exactly one of --cyclic or --square");
    const auto square = o.cyclic != 0 ? cyclic_latin_square(o.cyclic) : parse_square(o.square);
    const auto fraction = construct_latin_square_oa(square);
    write_fraction_file(o.output, fraction, {fmt::format("Latin square OA, {} symbols", square.size())});
    out << fmt::format("wrote {} runs to {}\n", fraction.size(), o.output);
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Aberration analysis of multilevel fractional factorial designs", "gwlp"};
    app.require_subcommand(1);
    Options o;
    const auto formats = CLI::IsMember({"table", "csv", "json"});

    auto* gwlp = app.add_subcommand("gwlp", "generalized word-length pattern of a fraction file");
    gwlp->add_option("file", o.file, "fraction file")->required();
    auto* mean_flag = gwlp->add_flag("--mean", o.mean, "sum mean aberrations (symmetric prime designs only)");
    gwlp->add_flag("--classic", o.classic, "sum aberrations")->excludes(mean_flag);
    gwlp->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

    auto* dist = app.add_subcommand("dist", "distribution of the mean aberrations of one order");
    dist->add_option("file", o.file, "fraction file")->required();
    dist->add_option("--order", o.order, "interaction order")->required();
    dist->add_option("--format", o.format, "table, csv or json")->check(formats);
    dist->add_option("--digits", o.digits, "decimal places in rendered values")->check(CLI::Range(0, 12));

    auto* coeff = app.add_subcommand("coeff", "level counts, coefficient and aberrations of one term");
    coeff->add_option("file", o.file, "fraction file")->required();
    coeff->add_option("--alpha", o.alpha, "exponent a1,...,am")->required();
    coeff->add_flag("--check-convolution", o.check_convolution, "verify the coefficient convolution identity");
    coeff->add_option("--digits", o.digits, "decimal places in rendered values")->check(CLI::Range(0, 12));

    auto* compare = app.add_subcommand("compare", "rank fractions by generalized minimum aberration");
    compare->add_option("files", o.files, "fraction files")->required()->expected(2, -1);
    compare->add_flag("--classic", o.classic, "always use the aberration route for the GWLP");
    compare->add_option("--digits", o.digits, "decimal places in rendered values")->check(CLI::Range(0, 12));

    auto* admissible = app.add_subcommand("admissible", "check the count convolution identities of a fraction");
    admissible->add_option("file", o.file, "fraction file")->required();
    admissible->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

    auto* enumerate = app.add_subcommand("enum-admissible", "enumerate admissible counts of free terms");
    enumerate->add_option("--levels", o.levels, "s,...,s (symmetric, s prime)")->required();
    enumerate->add_option("--runs", o.runs, "run count n")->required();
    enumerate->add_option("--strength", o.strength, "terms of order <= K are balanced")->required();
    enumerate->add_option("--free", o.free, "free exponent a1,...,am (repeatable)")->required();
    enumerate->add_option("--budget", o.budget, "maximum number of candidates")->check(CLI::PositiveNumber);

    auto* regular = app.add_subcommand("make-regular", "write a regular fraction");
    regular->add_option("--levels", o.levels, "s,...,s (symmetric, s prime)")->required();
    regular->add_option("--word", o.words, "defining word a1,...,am:h (repeatable)")->required();
    regular->add_option("-o,--output", o.output, "output path")->required();

    auto* latin = app.add_subcommand("make-latin", "write the OA of a Latin square");
    latin->add_option("--cyclic", o.cyclic, "cyclic square of this order")->check(CLI::Range(2, 1000));
    latin->add_option("--square", o.square, "rows separated by ';', entries by spaces or commas");
    latin->add_option("-o,--output", o.output, "output path")->required();

    for (auto* sub : {gwlp, dist, coeff, compare, admissible})
        sub->add_flag("--require-single-replicate", o.single_replicate, "reject files with repeated rows");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (gwlp->parsed()) return cmd_gwlp(o, out);
        if (dist->parsed()) return cmd_dist(o, out);
        if (coeff->parsed()) return cmd_coeff(o, out);
        if (compare->parsed()) return cmd_compare(o, out);
        if (admissible->parsed()) return cmd_admissible(o, out);
        if (enumerate->parsed()) return cmd_enum(o, out);
        if (regular->parsed()) return cmd_make_regular(o, out);
        if (latin->parsed()) return cmd_make_latin(o, out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace gwlp
