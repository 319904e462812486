#include <random>

#include "helpers.hpp"
#include "sl2chain/sampling.hpp"
#include "sl2chain/transvection.hpp"

using namespace sl2chain;
using sl2chain::testing::poly;
using sl2chain::testing::q;

namespace {

const HomPoly kX = monomial(1, 0);
const HomPoly kY = monomial(1, 1);

/// Expands a transvection through the monomial table, one product at a time.
HomPoly via_table(const HomPoly& f, const HomPoly& g, int k) {
  const TransvectionTable table(f.degree(), g.degree(), k);
  std::vector<Rational> out(static_cast<std::size_t>(table.result_degree() + 1));
  for (int a = 0; a <= f.degree(); ++a) {
    if (f.coeff(a) == 0) continue;
    for (int b = 0; b <= g.degree(); ++b) {
      const int s = a + b - k;
      if (s < 0 || s > table.result_degree()) {
        CHECK(table.at(a, b) == 0);
        continue;
      }
      out[static_cast<std::size_t>(s)] += f.coeff(a) * g.coeff(b) * table.at(a, b);
    }
  }
  return HomPoly(table.result_degree(), out);
}

}  // namespace

TEST_CASE("hand-evaluated transvections") {
  CHECK(transvection(kX, kY, 0) == monomial(2, 1));
  CHECK(transvection(monomial(2, 0), monomial(2, 2), 2) == poly(0, {q(1)}));
  CHECK(transvection(monomial(2, 2), monomial(2, 0), 2) == poly(0, {q(1)}));
  CHECK(transvection(kX, kY, 1) == poly(0, {q(1)}));
  CHECK(transvection(kY, kX, 1) == poly(0, {q(-1)}));
  CHECK(transvection(kX, kX, 1).is_zero());
}

TEST_CASE("orders outside the admissible range are errors") {
  CHECK_THROWS_AS(transvection(kX, kY, 2), ArgumentError);
  CHECK_THROWS_AS(transvection(kX, kY, -1), ArgumentError);
  CHECK_THROWS_AS(transvection(monomial(3, 0), monomial(0, 0), 1), ArgumentError);
  CHECK_THROWS_AS(TransvectionTable(2, 1, 2), ArgumentError);
}

TEST_CASE("Clebsch-Gordan bookkeeping") {
  CHECK(cg_components(1, 1).components == std::vector<int>{2, 0});
  CHECK(cg_components(5, 0).components == std::vector<int>{5});
  CHECK(cg_components(3, 2).components == std::vector<int>{5, 3, 1});
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 8; ++m) {
      const auto cg = cg_components(n, m);
      CHECK(cg.components.back() == std::abs(n - m));
      int dim = 0;
      for (std::size_t i = 0; i < cg.components.size(); ++i) {
        if (i > 0) CHECK(cg.components[i - 1] - cg.components[i] == 2);
        dim += cg.components[i] + 1;
      }
      CHECK(dim == (n + 1) * (m + 1));
    }
  }
}

TEST_CASE("wedge squares") {
  CHECK(wedge_components(1) == std::vector<int>{0});
  CHECK(wedge_components(3) == std::vector<int>{4, 0});
  CHECK(wedge_components(0).empty());
  for (int n = 0; n <= 10; ++n) {
    int dim = 0;
    for (int d : wedge_components(n)) dim += d + 1;
    CHECK(dim == n * (n + 1) / 2);
  }
}

TEST_CASE("multiplicity of invariant products") {
  const auto a = invariant_product_multiplicity(4, 2, 4);
  CHECK(a.multiplicity == 1);
  CHECK(a.order == 1);
  CHECK(invariant_product_multiplicity(4, 2, 5).multiplicity == 0);
  CHECK(invariant_product_multiplicity(2, 2, 6).multiplicity == 0);
  CHECK_FALSE(invariant_product_multiplicity(2, 2, 6).order.has_value());
  CHECK(invariant_product_multiplicity(5, 2, 1).multiplicity == 0);
}

TEST_CASE("transvections are sl2-equivariant") {
  std::mt19937_64 rng(21);
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= 10; ++m) {
      const HomPoly f = random_hompoly(n, rng);
      const HomPoly g = random_hompoly(m, rng);
      for (int k = 0; k <= std::min(n, m); ++k) {
        const HomPoly fg = transvection(f, g, k);
        REQUIRE(fg.degree() == n + m - 2 * k);
        for (auto s : {Sl2Generator::E, Sl2Generator::F, Sl2Generator::H}) {
          CHECK(act(s, fg) == transvection(act(s, f), g, k) + transvection(f, act(s, g), k));
        }
      }
    }
  }
}

TEST_CASE("symmetry and bilinearity") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % 9);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(std::min(n, m) + 1));
    const HomPoly f = random_hompoly(n, rng);
    const HomPoly f2 = random_hompoly(n, rng);
    const HomPoly g = random_hompoly(m, rng);
    const HomPoly g2 = random_hompoly(m, rng);
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational sign = k % 2 == 0 ? q(1) : q(-1);
    CHECK(transvection(g, f, k) == transvection(f, g, k) * sign);
    CHECK(transvection(f * a + f2 * b, g, k) == transvection(f, g, k) * a + transvection(f2, g, k) * b);
    CHECK(transvection(f, g * a + g2 * b, k) == transvection(f, g, k) * a + transvection(f, g2, k) * b);
    CHECK(transvection(f, g, 0) == multiply(f, g));
  }
}

TEST_CASE("the monomial table agrees with the derivative formula") {
  std::mt19937_64 rng(23);
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 8; ++m) {
      for (int k = 0; k <= std::min(n, m); ++k) {
        for (int a = 0; a <= n; ++a) {
          for (int b = 0; b <= m; ++b) {
            const HomPoly direct = transvection(monomial(n, a), monomial(m, b), k);
            const int s = a + b - k;
            const Rational c = monomial_transvection_coefficient(n, a, m, b, k);
            if (s < 0 || s > n + m - 2 * k) {
              CHECK(direct.is_zero());
              CHECK(c == 0);
            } else {
              CHECK(direct == monomial(n + m - 2 * k, s) * c);
            }
          }
        }
        CHECK(via_table(random_hompoly(n, rng), random_hompoly(m, rng), k).degree() == n + m - 2 * k);
      }
    }
  }
}

TEST_CASE("mixed partials") {
  // d^2/dxdy of x^2 y^2 = 4 x y
  CHECK(mixed_partial(monomial(4, 2), 1, 1) == monomial(2, 1) * q(4));
  const HomPoly over = mixed_partial(monomial(2, 0), 3, 0);
  CHECK(over.is_zero());
  CHECK(over.degree() == 0);
}
