#include "gwlp/constructions.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace gwlp {

Fraction construct_regular_fraction(const DesignSpec& design, const std::vector<Word>& words) {
    if (!design.is_symmetric_prime())
        throw ValidationError(fmt::format("regular fractions are built on symmetric s^m designs with s prime, got ({})",
                                          fmt::join(design.levels(), ",")));
    const int s = design.levels(0);
    for (const auto& w : words) {
        validate_exponent(design, w.alpha);
        if (w.alpha.is_zero()) throw ValidationError("defining words must be nonzero");
        if (w.level < 0 || w.level >= s)
            throw ValidationError(fmt::format("word level {} outside [0, {})", w.level, s));
    }
    std::vector<Point> points;
    for (std::int64_t i = 0; i < design.cardinality(); ++i) {
        Point p(exponent_at(design, i).entries());
        bool keep = true;
        for (const auto& w : words)
            if (eval_term(design, w.alpha, p) != w.level) {
                keep = false;
                break;
            }
        if (keep) points.push_back(std::move(p));
    }
    if (points.empty()) throw ValidationError("the defining words have no common solution");
    return Fraction(design, points);
}

LatinSquare cyclic_latin_square(int t) {
    if (t < 2) throw ValidationError("a Latin square needs at least 2 symbols");
    LatinSquare square(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t)));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) square[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % t;
    return square;
}

void validate_latin_square(const LatinSquare& square) {
    const std::size_t t = square.size();
    if (t < 2) throw ValidationError("a Latin square needs at least 2 rows");
    for (std::size_t i = 0; i < t; ++i) {
        if (square[i].size() != t)
            throw ValidationError(fmt::format("row {} has {} entries, expected {}", i, square[i].size(), t));
        std::vector<bool> seen(t, false);
        for (int v : square[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= t)
                throw ValidationError(fmt::format("row {} has symbol {} outside [0, {})", i, v, t));
            if (seen[static_cast<std::size_t>(v)])
                throw ValidationError(fmt::format("row {} repeats symbol {}", i, v));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    for (std::size_t j = 0; j < t; ++j) {
        std::vector<bool> seen(t, false);
        for (std::size_t i = 0; i < t; ++i) {
            const auto v = static_cast<std::size_t>(square[i][j]);
            if (seen[v]) throw ValidationError(fmt::format("column {} repeats symbol {}", j, v));
            seen[v] = true;
        }
    }
}

Fraction construct_latin_square_oa(const LatinSquare& square) {
    validate_latin_square(square);
    const int t = static_cast<int>(square.size());
    std::vector<Point> points;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            points.emplace_back(std::vector<int>{i, j, square[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    return Fraction(DesignSpec({t, t, t}), points);
}

}  // namespace gwlp
