#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2chain {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps results of arithmetic canonical; values
/// built from a numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

/// Raised when an operation is called outside its domain (bad index, degree
/// mismatch, inadmissible transvection order, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "num/den" or "num" (optional leading '-'). Throws ArgumentError on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);

Integer factorial(long n);

/// C(n, k) for integer n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// x (x-1) ... (x-k+1); the empty product for k == 0.
Integer falling_factorial(long x, long k);

/// Generalized binomial top (top-1) ... (top-k+1) / k! with a rational top.
Rational generalized_binomial(const Rational& top, long k);

}  // namespace sl2chain
