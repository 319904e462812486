#pragma once

#include <optional>
#include <vector>

#include "sl2chain/hompoly.hpp"

namespace sl2chain {

/// k-th transvection (f, g)_k of f in V_n and g in V_m, landing in
/// V_(n+m-2k):
///
///   (m-k)!/m! * (n-k)!/n! * sum_i (-1)^i C(k,i) d^k f/dx^(k-i)dy^i * d^k g/dx^i dy^(k-i)
///
/// Up to scale this is the only sl2-equivariant bilinear map V_n x V_m -> V_p.
/// Orders outside [0, min(n, m)] throw ArgumentError: the map does not
/// exist there, and callers decide separately that such a product is zero.
HomPoly transvection(const HomPoly& f, const HomPoly& g, int k);

/// d^(nx+ny) p / dx^nx dy^ny. Zero of degree max(d-nx-ny, 0) when either
/// order exceeds the degree.
HomPoly mixed_partial(const HomPoly& p, int nx, int ny);

/// Coefficient c with (x^(n-a) y^a, x^(m-b) y^b)_k = c * x^(n+m-2k-s) y^s,
/// s = a + b - k. Closed form in falling factorials, independent of
/// transvection(); the monomial checkers use it through TransvectionTable.
Rational monomial_transvection_coefficient(int n, int a, int m, int b, int k);

/// All monomial coefficients of (., .)_k on V_n x V_m, precomputed.
class TransvectionTable {
 public:
  TransvectionTable(int n, int m, int k);

  int left_degree() const { return n_; }
  int right_degree() const { return m_; }
  int order() const { return k_; }
  int result_degree() const { return n_ + m_ - 2 * k_; }

  /// Coefficient of the product of monomials a and b; it multiplies the
  /// monomial with index a + b - k of the result.
  const Rational& at(int a, int b) const {
    return coeffs_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m_ + 1) +
                   static_cast<std::size_t>(b)];
  }

 private:
  int n_;
  int m_;
  int k_;
  std::vector<Rational> coeffs_;
};

struct CgDecomposition {
  int left_degree;
  int right_degree;
  /// n+m, n+m-2, ..., |n-m|.
  std::vector<int> components;
};

/// Clebsch-Gordan: V_n (x) V_m = sum_{k=0}^{min(n,m)} V_(n+m-2k).
CgDecomposition cg_components(int n, int m);

/// Degrees in Lambda^2 V_n: 2n-2, 2n-6, ..., the odd-k summands of V_n (x) V_n.
std::vector<int> wedge_components(int n);

struct InvariantProductMultiplicity {
  int multiplicity = 0;
  /// Transvection order realizing the product when multiplicity is 1.
  std::optional<int> order;
};

/// Dimension of Hom_sl2(V_n (x) V_m, V_p), which is 0 or 1.
InvariantProductMultiplicity invariant_product_multiplicity(int n, int m, int p);

}  // namespace sl2chain
