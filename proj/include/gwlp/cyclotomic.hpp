#pragma once

// Exact arithmetic in Z[zeta_D], zeta_D = exp(2*pi*i/D), with polynomials
// stored as coefficient vectors, lowest degree first.

#include "gwlp/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gwlp {

using IntPoly = std::vector<std::int64_t>;

/// The D-th cyclotomic polynomial Phi_D (monic, integer coefficients).
IntPoly cyclotomic_polynomial(int D);

/// Remainder of `poly` modulo Phi_D, of length deg Phi_D. Empty on int64 overflow.
std::optional<IntPoly> reduce_mod_cyclotomic(IntPoly poly, int D);

/// Value of sum_e poly[e] * zeta_D^e when it is rational, else empty.
/// Also empty on int64 overflow.
std::optional<Rational> rational_value(const IntPoly& poly, int D);

}  // namespace gwlp
