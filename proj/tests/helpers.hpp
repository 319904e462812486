#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "sl2chain/hompoly.hpp"
#include "sl2chain/rational.hpp"

namespace sl2chain::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

/// Polynomial from coefficients listed by ascending y-exponent.
inline HomPoly poly(int degree, std::initializer_list<Rational> coeffs) {
  return HomPoly(degree, std::vector<Rational>(coeffs));
}

}  // namespace sl2chain::testing

namespace doctest {
template <>
struct StringMaker<sl2chain::HomPoly> {
  static String convert(const sl2chain::HomPoly& p) {
    return ("V" + std::to_string(p.degree()) + ": " + sl2chain::to_string(p)).c_str();
  }
};
template <>
struct StringMaker<sl2chain::Rational> {
  static String convert(const sl2chain::Rational& r) { return sl2chain::to_string(r).c_str(); }
};
}  // namespace doctest
