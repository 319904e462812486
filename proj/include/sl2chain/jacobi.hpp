#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sl2chain/chainspec.hpp"
#include "sl2chain/hompoly.hpp"

namespace sl2chain {

/// Structure scalars alpha_ijk with p_ijk = alpha_ijk * (., .)_(c_ijk).
/// Absent slots are zero.
using AlphaAssignment = std::map<SlotIndex, Rational>;

Rational alpha_of(const AlphaAssignment& alphas, const SlotIndex& slot);

/// Element of the nilradical m_1 + ... + m_t, stored per module index.
/// Missing components are zero.
struct GradedElement {
  std::map<int, HomPoly> components;

  bool is_zero() const;
  /// Adds p into component i (creating it if needed).
  void add(int i, const HomPoly& p);
  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator-=(const GradedElement& other);
  GradedElement& operator*=(const Rational& s);

  friend bool operator==(const GradedElement& a, const GradedElement& b);
};

/// [u, v] for u in m_i, v in m_j, i <= j: sum over k of alpha_ijk (u, v)_c.
/// Throws ArgumentError on degree mismatch, i > j, or a nonzero alpha on a
/// slot whose transvection does not exist.
GradedElement nil_bracket(const ModuleLayout& layout, const AlphaAssignment& alphas,
                          const HomPoly& u, int i, const HomPoly& v, int j);

/// [u, v] for any module indices, using [u, v] = -[v, u] when i > j.
GradedElement nil_bracket_any(const ModuleLayout& layout, const AlphaAssignment& alphas,
                              const HomPoly& u, int i, const HomPoly& v, int j);

/// Bilinear extension of nil_bracket_any to graded elements.
GradedElement nil_bracket(const ModuleLayout& layout, const AlphaAssignment& alphas,
                          const GradedElement& x, const GradedElement& y);

/// J(u, v, w) = [u, [v, w]] + [v, [w, u]] + [w, [u, v]] inside the nilradical.
/// Zero whenever i + j + k > t.
GradedElement jacobi_residual(const ModuleLayout& layout, const AlphaAssignment& alphas,
                              const HomPoly& u, int i, const HomPoly& v, int j,
                              const HomPoly& w, int k);

/// alpha224 * alpha112 / (alpha123 * alpha134) == value.
struct RatioConstraint {
  SlotIndex slot;
  Rational value;
  std::array<SlotIndex, 4> basis;
};

/// sum coefficient * alpha_a * alpha_b == 0 over the listed products.
struct ProductRelation {
  struct Term {
    SlotIndex first;
    SlotIndex second;
    Rational coefficient;
  };
  std::vector<Term> terms;
};

struct AlphaConstraintSet {
  std::set<SlotIndex> zeros;
  std::set<SlotIndex> free;
  std::set<SlotIndex> required_nonzero;
  std::vector<RatioConstraint> ratios;
  std::vector<ProductRelation> relations;
};

/// True when the assignment meets every constraint in the set.
bool satisfies(const AlphaConstraintSet& constraints, const AlphaAssignment& alphas);

/// A monomial triple on which the Jacobi residual does not vanish.
struct Witness {
  /// Module index of each argument.
  std::array<int, 3> modules{};
  /// y-exponent of each argument: x^(deg - a) y^a.
  std::array<int, 3> exponents{};
  /// Assignment under which the residual was evaluated.
  AlphaAssignment alphas;
  GradedElement residual;
};

enum class VerdictStage {
  /// Passed every check.
  Valid,
  /// Failed the integer checks; no Jacobi evaluation was attempted.
  Inadmissible,
  /// Admissible, but no admissible alpha satisfies Jacobi.
  JacobiFailure,
};

struct ChainVerdict {
  ChainTuple tuple;
  bool valid = false;
  VerdictStage stage = VerdictStage::Inadmissible;
  std::vector<Violation> violations;
  std::optional<ModuleLayout> layout;
  /// Present when valid.
  std::optional<AlphaConstraintSet> constraints;
  /// The normalized assignment the checker worked with (alpha112 = alpha123 =
  /// alpha134 = 1, alpha224 from the ratio, remaining slots zero), or the
  /// caller's assignment for check_chain_general.
  AlphaAssignment alphas;
  /// Present exactly when stage == JacobiFailure.
  std::optional<Witness> witness;
};

/// Five-ideal chains: step 1, then the cyclic identity
/// (u,(v,w)_n2)_n3 + (v,(w,u)_n2)_n3 + (w,(u,v)_n2)_n3 = 0 over all monomial
/// triples of m_1.
ChainVerdict check_chain_t3(const ChainTuple& tuple);

/// Six-ideal chains: the t = 3 identity on m_1, the m_4 projection of the
/// m_1 triples as a linear system in (alpha124 alpha112, alpha134 alpha113),
/// and the two-in-m_1/one-in-m_2 identity solved for the ratio
/// alpha224 alpha112 / (alpha123 alpha134).
ChainVerdict check_chain_t4(const ChainTuple& tuple);

/// Evaluates J on every monomial triple (u@i, v@j, w@k), i <= j <= k,
/// i + j + k <= t, under the given assignment. Throws ArgumentError when the
/// assignment is nonzero on a ForcedZero slot, zero on a Required slot, or
/// names a slot that does not exist.
ChainVerdict check_chain_general(const ChainTuple& tuple, const AlphaAssignment& alphas);

/// Unit alpha on Required slots, zero elsewhere.
AlphaAssignment unit_required_alphas(const ModuleLayout& layout);

/// An assignment satisfying a valid verdict's constraints, with random
/// nonzero values on required and free slots.
AlphaAssignment random_instantiation(const ChainVerdict& verdict, std::mt19937_64& rng);

/// Every valid tuple of length t (3 or 4) with n1 <= n1_max, sorted
/// lexicographically. Extensions of invalid prefixes are never checked.
/// workers == 0 uses the hardware concurrency.
std::vector<ChainVerdict> search(int t, int n1_max, unsigned workers = 0);

}  // namespace sl2chain
