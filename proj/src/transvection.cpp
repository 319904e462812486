#include "sl2chain/transvection.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sl2chain {

namespace {

Rational transvection_prefactor(int n, int m, int k) {
  return make_rational(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n));
}

void check_order(int n, int m, int k) {
  if (k < 0 || k > std::min(n, m)) {
    throw ArgumentError("transvection order " + std::to_string(k) + " is not in [0, min(" +
                        std::to_string(n) + ", " + std::to_string(m) + ")]");
  }
}

}  // namespace

HomPoly mixed_partial(const HomPoly& p, int nx, int ny) {
  const int d = p.degree();
  const int out_degree = std::max(d - nx - ny, 0);
  std::vector<Rational> out(static_cast<std::size_t>(out_degree) + 1, Rational(0));
  if (nx + ny > d) return HomPoly(out_degree, std::move(out));
  for (int a = 0; a <= d; ++a) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(a)];
    if (c == 0 || a < ny || d - a < nx) continue;
    const Integer scale = falling_factorial(d - a, nx) * falling_factorial(a, ny);
    out[static_cast<std::size_t>(a - ny)] += c * Rational(scale);
  }
  return HomPoly(out_degree, std::move(out));
}

HomPoly transvection(const HomPoly& f, const HomPoly& g, int k) {
  const int n = f.degree();
  const int m = g.degree();
  check_order(n, m, k);
  HomPoly sum(n + m - 2 * k);
  for (int i = 0; i <= k; ++i) {
    HomPoly term = multiply(mixed_partial(f, k - i, i), mixed_partial(g, i, k - i));
    term *= Rational(binomial(k, i));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  sum *= transvection_prefactor(n, m, k);
  return sum;
}

Rational monomial_transvection_coefficient(int n, int a, int m, int b, int k) {
  check_order(n, m, k);
  if (a < 0 || a > n || b < 0 || b > m) throw ArgumentError("monomial index out of range");
  Integer s = 0;
  for (int i = 0; i <= k; ++i) {
    Integer term = binomial(k, i) * falling_factorial(n - a, k - i) * falling_factorial(a, i) *
                   falling_factorial(m - b, i) * falling_factorial(b, k - i);
    if (i % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  if (s == 0) return 0;
  return transvection_prefactor(n, m, k) * Rational(s);
}

TransvectionTable::TransvectionTable(int n, int m, int k) : n_(n), m_(m), k_(k) {
  check_order(n, m, k);
  coeffs_.reserve(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m + 1));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= m; ++b) {
      coeffs_.push_back(monomial_transvection_coefficient(n, a, m, b, k));
    }
  }
}

CgDecomposition cg_components(int n, int m) {
  if (n < 0 || m < 0) throw ArgumentError("negative module degree");
  CgDecomposition cg{n, m, {}};
  for (int k = 0; k <= std::min(n, m); ++k) cg.components.push_back(n + m - 2 * k);
  return cg;
}

std::vector<int> wedge_components(int n) {
  if (n < 0) throw ArgumentError("negative module degree");
  std::vector<int> out;
  for (int k = 0; 2 * k <= n - 1; ++k) out.push_back(2 * n - 4 * k - 2);
  return out;
}

InvariantProductMultiplicity invariant_product_multiplicity(int n, int m, int p) {
  if (n < 0 || m < 0 || p < 0) return {};
  const int diff = n + m - p;
  if (diff < 0 || diff % 2 != 0) return {};
  const int k = diff / 2;
  if (k > std::min(n, m)) return {};
  return {1, k};
}

}  // namespace sl2chain
