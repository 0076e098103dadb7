#pragma once

#include "gwlp/design.hpp"

#include <utility>
#include <vector>

namespace gwlp {

/// A defining relation X^alpha = omega_h.
struct Word {
    Exponent alpha;
    int level = 0;
};

/// All points of a symmetric s^m design (s prime) satisfying every word, each once.
/// Throws ValidationError for non-prime or asymmetric designs, zero words,
/// levels outside [0, s) and an empty solution set.
Fraction construct_regular_fraction(const DesignSpec& design, const std::vector<Word>& words);

using LatinSquare = std::vector<std::vector<int>>;

/// square[i][j] = (i + j) mod t
LatinSquare cyclic_latin_square(int t);

/// Throws ValidationError naming the first offending row or column.
void validate_latin_square(const LatinSquare& square);

/// The t^2-run fraction {(i, j, square[i][j])} of the t^3 design.
Fraction construct_latin_square_oa(const LatinSquare& square);

}  // namespace gwlp
