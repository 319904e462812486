#include <random>

#include "helpers.hpp"
#include "sl2chain/sampling.hpp"

using namespace sl2chain;
using sl2chain::testing::poly;
using sl2chain::testing::q;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(to_string(make_rational(3, 6)) == "1/2");
  CHECK(to_string(make_rational(4, -2)) == "-2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(make_rational(2, 4) == q(1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), ArgumentError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/5") == q(7, 5));
  CHECK(parse_rational("-2") == q(-2));
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK_THROWS_AS(parse_rational("6/-4"), ArgumentError);
  CHECK_THROWS_AS(parse_rational(""), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("x"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ArgumentError);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(generalized_binomial(q(1, 2), 2) == q(-1, 8));
  CHECK(generalized_binomial(q(7), 3) == q(35));
}

TEST_CASE("monomial basis") {
  CHECK(to_string(monomial(3, 0)) == "x^3");
  CHECK(to_string(monomial(2, 1)) == "x*y");
  CHECK(to_string(monomial(0, 0)) == "1");
  CHECK(monomial(4, 2).coeff(2) == 1);
  CHECK(monomial(4, 2).support_size() == 1);
  CHECK_THROWS_AS(monomial(2, 3), ArgumentError);
  CHECK_THROWS_AS(monomial(2, -1), ArgumentError);
  CHECK_THROWS_AS(monomial(-1, 0), ArgumentError);
}

TEST_CASE("zero polynomials keep their degree") {
  const HomPoly z2(2);
  const HomPoly z3(3);
  CHECK(z2.is_zero());
  CHECK(z2.dimension() == 3);
  CHECK_FALSE(z2 == z3);
  HomPoly p = monomial(2, 0);
  CHECK_THROWS_AS(p += z3, ArgumentError);
  CHECK_THROWS_AS(HomPoly(2, {q(1), q(2)}), ArgumentError);
}

TEST_CASE("partial derivatives") {
  CHECK(diff(monomial(2, 0), Variable::X) == poly(1, {q(2), q(0)}));
  const HomPoly dy2 = diff(monomial(2, 2), Variable::X);
  CHECK(dy2.degree() == 1);
  CHECK(dy2.is_zero());
  // x^2 y -> 2 x y
  CHECK(diff(monomial(3, 1), Variable::X) == poly(2, {q(0), q(2), q(0)}));
  CHECK(diff(monomial(3, 1), Variable::Y) == poly(2, {q(1), q(0), q(0)}));
  const HomPoly c = diff(HomPoly(0, {q(5)}), Variable::Y);
  CHECK(c.degree() == 0);
  CHECK(c.is_zero());
}

TEST_CASE("sl2 action on monomials") {
  for (int d = 0; d <= 6; ++d) {
    CHECK(act(Sl2Generator::H, monomial(d, 0)) == monomial(d, 0) * q(d));
    CHECK(act(Sl2Generator::E, monomial(d, 0)).is_zero());
    CHECK(act(Sl2Generator::F, monomial(d, d)).is_zero());
    for (int a = 0; a <= d; ++a) {
      CHECK(act(Sl2Generator::H, monomial(d, a)) == monomial(d, a) * q(d - 2 * a));
    }
  }
  // e y^3 = x d/dy y^3 = 3 x y^2
  CHECK(act(Sl2Generator::E, monomial(3, 3)) == monomial(3, 2) * q(3));
  // f x^3 = y d/dx x^3 = 3 x^2 y
  CHECK(act(Sl2Generator::F, monomial(3, 0)) == monomial(3, 1) * q(3));
}

TEST_CASE("[e,f] = h on every module, and the action preserves degree") {
  std::mt19937_64 rng(11);
  for (int d = 0; d <= 10; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const HomPoly p = random_hompoly(d, rng);
      const HomPoly ef = act(Sl2Generator::E, act(Sl2Generator::F, p));
      const HomPoly fe = act(Sl2Generator::F, act(Sl2Generator::E, p));
      CHECK(ef - fe == act(Sl2Generator::H, p));
      // [h,e] = 2e and [h,f] = -2f as operators.
      CHECK(act(Sl2Generator::H, act(Sl2Generator::E, p)) - act(Sl2Generator::E, act(Sl2Generator::H, p)) ==
            act(Sl2Generator::E, p) * q(2));
      CHECK(act(Sl2Generator::H, act(Sl2Generator::F, p)) - act(Sl2Generator::F, act(Sl2Generator::H, p)) ==
            act(Sl2Generator::F, p) * q(-2));
      for (auto g : {Sl2Generator::E, Sl2Generator::F, Sl2Generator::H}) CHECK(act(g, p).degree() == d);
    }
  }
}

TEST_CASE("diff is linear and lowers the degree by one") {
  std::mt19937_64 rng(12);
  for (int d = 1; d <= 10; ++d) {
    const HomPoly p = random_hompoly(d, rng);
    const HomPoly r = random_hompoly(d, rng);
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    for (auto v : {Variable::X, Variable::Y}) {
      CHECK(diff(p * a + r * b, v) == diff(p, v) * a + diff(r, v) * b);
      CHECK(diff(p, v).degree() == d - 1);
    }
  }
}

TEST_CASE("polynomial product") {
  // (x + y)(x - y) = x^2 - y^2
  const HomPoly s = poly(1, {q(1), q(1)});
  const HomPoly t = poly(1, {q(1), q(-1)});
  CHECK(multiply(s, t) == poly(2, {q(1), q(0), q(-1)}));
}

TEST_CASE("text rendering") {
  CHECK(to_string(poly(3, {q(0), q(2), q(0), q(-1, 3)})) == "2*x^2*y - 1/3*y^3");
  CHECK(to_string(HomPoly(2)) == "0");
  CHECK(to_string(Sl2Generator::E) == "e");
}
