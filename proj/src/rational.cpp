#include "sl2chain/rational.hpp"

#include <cctype>

namespace sl2chain {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ArgumentError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ArgumentError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ArgumentError("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-') {
    throw ArgumentError("malformed rational: '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(long n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw ArgumentError("binomial with negative top");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer falling_factorial(long x, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational generalized_binomial(const Rational& top, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= top - i;
  return r / Rational(factorial(k));
}

}  // namespace sl2chain
