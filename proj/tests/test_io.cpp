#include "gwlp/constructions.hpp"
#include "gwlp/fraction_file.hpp"
#include "gwlp/report.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace gwlp;

namespace {

Fraction even_parity() {
    return Fraction(DesignSpec({2, 2, 2}),
                    std::vector<Point>{Point({0, 0, 0}), Point({0, 1, 1}), Point({1, 0, 1}), Point({1, 1, 0})});
}

std::string error_of(std::string_view text) {
    try {
        parse_fraction_file(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

bool same_fraction(const Fraction& a, const Fraction& b) {
    return a.design().levels() == b.design().levels() && a.entries() == b.entries();
}

}  // namespace

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(1, 12)) == "1/12");
    CHECK(to_string(Rational(-3)) == "-3");
    CHECK(to_decimal(Rational(1, 12)) == "0.0833");
    CHECK(to_decimal(Rational(1, 4)) == "0.2500");
    CHECK(to_decimal(Rational(69, 2), 1) == "34.5");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(Rational(1, 3), 0) == "0");
    CHECK(format_value(Rational(1, 12)) == "1/12 (0.0833)");
    CHECK(format_value(Rational(4)) == "4");
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("parse fraction files") {
    CHECK(same_fraction(parse_fraction_file("4 3\n2 2 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0"), even_parity()));
    CHECK(same_fraction(parse_fraction_file("# c\r\n4 3\r\n\r\n2 2 2\r\n# mid\r\n0 0 0\r\n0 1 1\r\n1 0 1\r\n1 1 0\r\n"),
                        even_parity()));
    const auto dup = parse_fraction_file("3 2\n2 3\n1 2\n0 0\n1 2\n");
    CHECK(dup.size() == 3);
    CHECK(dup.multiplicity(Point({1, 2})) == 2);

    std::string nine = "9 3\n3 3 3\n";
    for (int i = 0; i < 8; ++i) nine += "0 0 0\n";
    const auto row_error = error_of(nine);
    CHECK(row_error.find("9 runs") != std::string::npos);
    CHECK(row_error.find("8 data rows") != std::string::npos);
    CHECK(row_error.rfind("line ", 0) == 0);

    const auto range_error = error_of("2 2\n3 3\n0 1\n# note\n1 3\n");
    CHECK(range_error.find("line 5") != std::string::npos);
    CHECK(error_of("").find("header") != std::string::npos);
    CHECK(error_of("4\n2 2 2\n").find("line 1") != std::string::npos);
    CHECK(error_of("a 3\n2 2 2\n").find("line 1") != std::string::npos);
    CHECK(error_of("1 2\n2 1\n0 0\n").find("line 2") != std::string::npos);
    CHECK(error_of("1 2\n2 2\n0 0 0\n").find("line 3") != std::string::npos);
    CHECK(error_of("1 2\n2 2\n0 0\n1 1\n").find("line 4") != std::string::npos);
    CHECK_THROWS_AS(read_fraction_file("/nonexistent/file.txt"), ValidationError);
}

TEST_CASE("render and parse round trip") {
    std::mt19937 rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<int> levels(1 + rng() % 5);
        for (auto& s : levels) s = 2 + static_cast<int>(rng() % 6);
        const DesignSpec d(levels);
        const auto f = testing::random_multiset(d, 1 + static_cast<int>(rng() % 30), rng);
        const auto text = render_fraction_file(f, {"round trip"});
        CHECK(same_fraction(parse_fraction_file(text), f));
    }
}

TEST_CASE("regular fraction construction") {
    const auto c5 = construct_regular_fraction(DesignSpec({5, 5, 5}), {{Exponent({1, 1, 4}), 0}});
    CHECK(c5.size() == 25);
    for (const auto& [p, m] : c5.entries()) CHECK(p[2] == (p[0] + p[1]) % 5);
    CHECK(same_fraction(construct_regular_fraction(DesignSpec({2, 2, 2}), {{Exponent({1, 1, 1}), 0}}), even_parity()));
    const auto three =
        construct_regular_fraction(DesignSpec({3, 3, 3}), {{Exponent({1, 1, 1}), 0}, {Exponent({1, 1, 2}), 0}});
    CHECK(three.size() == 3);
    CHECK(three.single_replicate());
    CHECK_THROWS_AS(construct_regular_fraction(DesignSpec({4, 4}), {{Exponent({1, 1}), 0}}), ValidationError);
    CHECK_THROWS_AS(construct_regular_fraction(DesignSpec({3, 3}), {{Exponent({0, 0}), 0}}), ValidationError);
    CHECK_THROWS_AS(construct_regular_fraction(DesignSpec({3, 3}), {{Exponent({1, 1}), 3}}), ValidationError);
    CHECK_THROWS_AS(
        construct_regular_fraction(DesignSpec({3, 3}), {{Exponent({1, 1}), 0}, {Exponent({1, 1}), 1}}),
        ValidationError);
}

TEST_CASE("Latin square construction") {
    for (int t : {2, 3, 5, 7}) {
        const auto latin = construct_latin_square_oa(cyclic_latin_square(t));
        const auto regular = construct_regular_fraction(DesignSpec({t, t, t}), {{Exponent({1, 1, t - 1}), 0}});
        CHECK(same_fraction(latin, regular));
    }
    CHECK(same_fraction(construct_latin_square_oa({{0, 1}, {1, 0}}), even_parity()));
    try {
        validate_latin_square({{0, 1, 1}, {1, 2, 0}, {2, 0, 1}});
        FAIL("expected an error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("row 0") != std::string::npos);
    }
    try {
        validate_latin_square({{0, 1, 2}, {0, 2, 1}, {2, 0, 1}});
        FAIL("expected an error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("column 0") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_latin_square({{0, 1}, {1}}), ValidationError);
    CHECK_THROWS_AS(validate_latin_square({{0, 2}, {2, 0}}), ValidationError);
}

TEST_CASE("report rendering") {
    const auto c5 = construct_latin_square_oa(cyclic_latin_square(5));
    const auto report = build_report(c5, {3});
    CHECK(report.gwlp_route == "mean");
    CHECK(format_gwlp(report.gwlp) == "(0, 0, 4)");
    CHECK(render_distribution_table(report.distributions.at(3)) == "0 : 60\n1 : 4\n");
    CHECK(build_report(c5, {}, true).gwlp_route == "classic");
    CHECK(format_gwlp(build_report(c5, {}, true).gwlp) == "(0, 0, 4)");

    const auto side = render_distributions_side_by_side({"a", "b"}, {report.distributions.at(3), report.distributions.at(3)});
    CHECK(side.rfind("mean aberration", 0) == 0);
    CHECK(side.find("| 60 | 60\n") != std::string::npos);
    CHECK(side.find("|  4 |  4\n") != std::string::npos);
}

TEST_CASE("CSV and JSON carry identical values") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = testing::random_single_replicate(DesignSpec({3, 3, 3, 3}), 6 + static_cast<int>(rng() % 20), rng);
        const auto report = build_report(f, {1, 2, 3, 4});
        const auto json = report_to_json(report);
        for (const auto& [order, dist] : report.distributions) {
            const auto csv = render_distribution_csv(dist);
            std::istringstream lines(csv);
            std::string line;
            std::getline(lines, line);
            CHECK(line == "value_exact,value_decimal,count");
            const auto& rows = json["distributions"][std::to_string(order)]["histogram"];
            std::size_t i = 0;
            std::int64_t total = 0;
            while (std::getline(lines, line)) {
                REQUIRE(i < rows.size());
                const auto first = line.find(',');
                const auto second = line.find(',', first + 1);
                CHECK(line.substr(0, first) == rows[i]["value"].get<std::string>());
                CHECK(line.substr(first + 1, second - first - 1) == rows[i]["decimal"].get<std::string>());
                CHECK(std::stoll(line.substr(second + 1)) == rows[i]["count"].get<std::int64_t>());
                total += rows[i]["count"].get<std::int64_t>();
                ++i;
            }
            CHECK(i == rows.size());
            CHECK(total == count_exponents_of_order(f.design(), order));
            CHECK(json["distributions"][std::to_string(order)]["total"].get<std::int64_t>() == total);
        }
        CHECK(json["gwlp"]["mode"] == "exact");
        CHECK(json["gwlp"]["values"].size() == 4);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(parse_rational(json["gwlp"]["values"][j].get<std::string>()) == report.gwlp.exact[j]);
    }
}
