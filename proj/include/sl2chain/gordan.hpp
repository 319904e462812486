#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2chain/chainspec.hpp"
#include "sl2chain/hompoly.hpp"

namespace sl2chain {

/// Shape of a Gordan bracket
///
///   [ f  g  h ]
///   [ m  n  p ]
///   [ a1 a2 a3 ]
///
/// with f in V_m, g in V_n and h in V_p (degrees aligned with the columns).
struct GordanSpec {
  std::array<int, 3> degrees{};
  std::array<int, 3> exponents{};

  /// a1+a2 <= p, a2+a3 <= m, a3+a1 <= n, and (a1 == 0 or a2+a3 == m), all
  /// exponents non-negative. Under these conditions the bracket vanishes.
  bool hypothesis_holds() const;
};

/// Key of one iterated transvection ((X, Y)_inner, Z)_outer, where X, Y, Z
/// are argument slots 0..2 and X < Y after canonicalization.
struct IteratedKey {
  int left = 0;
  int right = 1;
  int outer = 2;
  int inner_order = 0;
  int outer_order = 0;

  auto operator<=>(const IteratedKey&) const = default;
};

/// Formal rational combination of iterated transvections of three named
/// arguments. Terms are canonicalized with (X, Y)_k = (-1)^k (Y, X)_k, so two
/// combinations that agree up to that symmetry compare equal.
class FormalCombination {
 public:
  /// Degrees of argument slots 0, 1, 2.
  explicit FormalCombination(std::array<int, 3> degrees);

  const std::array<int, 3>& degrees() const { return degrees_; }
  const std::map<IteratedKey, Rational>& terms() const { return terms_; }

  /// Adds c * ((arg[left], arg[right])_inner, arg[outer])_outer. Throws
  /// ArgumentError when a transvection order is out of range.
  void add(const Rational& c, int left, int right, int outer, int inner_order, int outer_order);
  /// Adds c * (arg[single], (arg[left], arg[right])_inner)_outer, rewritten
  /// through the outer symmetry.
  void add_right_nested(const Rational& c, int single, int left, int right, int inner_order,
                        int outer_order);
  /// this += c * other. Degrees must agree.
  void add(const FormalCombination& other, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  /// r with *this == r * other, when such an r exists and other is nonzero.
  std::optional<Rational> ratio_to(const FormalCombination& other) const;

  HomPoly evaluate(const std::array<HomPoly, 3>& args) const;

 private:
  std::array<int, 3> degrees_;
  std::map<IteratedKey, Rational> terms_;
};

std::string to_string(const FormalCombination& c, const std::array<std::string, 3>& names = {"f", "g", "h"});

/// Expansion of the bracket whose matrix columns hold the arguments in slots
/// roles[0], roles[1], roles[2] of a combination over `slot_degrees`:
///
///   sum_i C(n-a1-a3, i) C(a2, i) / C(m+n-2a3-i+1, i) ((f,g)_(a3+i), h)_(a1+a2-i)
///   + (-1)^(a1+1) sum_i C(p-a1-a2, i) C(a3, i) / C(m+p-2a2-i+1, i) ((f,h)_(a2+i), g)_(a1+a3-i)
///
/// Each sum stops where a numerator binomial vanishes. Throws ArgumentError on
/// an out-of-range transvection order or a vanishing denominator.
FormalCombination gordan_expansion(const std::array<int, 3>& slot_degrees,
                                   const std::array<int, 3>& roles,
                                   const std::array<int, 3>& exponents);

/// The bracket with f, g, h in the matrix columns, evaluated exactly. It is
/// never assumed to vanish.
HomPoly gordan_bracket(const HomPoly& f, const HomPoly& g, const HomPoly& h,
                       const std::array<int, 3>& exponents);

/// Formal [f,g,h]* = [f,g,h] + [g,h,f] + [h,f,g] - [g,f,h] - [f,h,g] - [h,g,f]
/// over three arguments of the same degree.
FormalCombination gordan_star_formal(int degree, const std::array<int, 3>& exponents);
HomPoly gordan_star(const HomPoly& f, const HomPoly& g, const HomPoly& h,
                    const std::array<int, 3>& exponents);

/// Which argument of the mixed bracket lives in V_(2n-2):
/// 1 -> (2n-2, n, n), 2 -> (n, 2n-2, n), 3 -> (n, n, 2n-2).
enum class MixedShape { First = 1, Second = 2, Third = 3 };

/// Formal mixed bracket with the argument slots 0, 1 of degree n and slot 2 of
/// degree 2n-2; `columns` says which slot sits in each matrix column and must
/// be consistent with `shape`.
FormalCombination gordan_mixed_formal(int n, MixedShape shape, const std::array<int, 3>& columns,
                                      const std::array<int, 3>& exponents);

/// The mixed bracket on arguments given in matrix-column order, e.g.
/// gordan_mixed(h, f, g, First, ...) for [h,f,g]_1.
HomPoly gordan_mixed(const HomPoly& a, const HomPoly& b, const HomPoly& c, MixedShape shape,
                     const std::array<int, 3>& exponents);

/// [f,g,h]_3 - [g,f,h]_3 + [g,h,f]_2 - [h,g,f]_1 + [h,f,g]_1 - [f,h,g]_2
/// with f, g in V_n and h in V_(2n-2).
FormalCombination gordan_mixed_star_formal(int n, const std::array<int, 3>& exponents);
HomPoly gordan_mixed_star(const HomPoly& f, const HomPoly& g, const HomPoly& h,
                          const std::array<int, 3>& exponents);

/// One combination of Gordan brackets that establishes the Jacobi identity of
/// a chain family, next to the Jacobi expression it stands for. Slots 0, 1, 2
/// hold u, v (in m_1) and w (in m_1 for five-ideal chains, m_2 for six).
struct ProofReplay {
  std::string family;
  int parameter = 0;
  ChainTuple tuple;
  FormalCombination gordan;
  FormalCombination jacobi;
};

/// Jacobi expression sum_cyc (u, (v, w)_n2)_n3 for a three-module tuple.
FormalCombination jacobi_formal_t3(const ChainTuple& tuple);

/// Case (b) expression of a four-module tuple with u, v in m_1, w in m_2:
/// (u,(v,w)_n3)_n4 - (v,(u,w)_n3)_n4 + alpha (w,(u,v)_n2)_(n3+n4-n2).
FormalCombination jacobi_formal_t4(const ChainTuple& tuple, const Rational& alpha);

/// Every replay with family parameter up to n_max.
std::vector<ProofReplay> proof_replays(int n_max);

}  // namespace sl2chain
