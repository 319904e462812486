#pragma once

#include <random>

#include "sl2chain/hompoly.hpp"

namespace sl2chain {

/// Random rational with numerator in [-bound, bound] and denominator in
/// [1, max_den]. May be zero.
Rational random_rational(std::mt19937_64& rng, int bound = 5, int max_den = 4);

/// Random nonzero rational.
Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 5, int max_den = 4);

/// Random element of V_d with random_rational coefficients.
HomPoly random_hompoly(int degree, std::mt19937_64& rng);

}  // namespace sl2chain
