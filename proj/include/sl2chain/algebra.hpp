#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sl2chain/chainspec.hpp"
#include "sl2chain/jacobi.hpp"

namespace sl2chain {

/// Sparse vector in the basis of a ChainAlgebra: (index, coefficient) pairs
/// with ascending indices and nonzero coefficients.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Raised when the lower central series does not have the dimensions the
/// module layout predicts.
class StructuralInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BuildMode {
  /// Rejects assignments that break the slot skeleton.
  Checked,
  /// Accepts any assignment whose transvections exist; used to build
  /// deliberately broken algebras.
  Unchecked,
};

/// sl2 + m_1 + ... + m_t as explicit structure constants. Basis: e, h, f,
/// then for each module i the monomials x^(deg - a) y^a by ascending a.
class ChainAlgebra {
 public:
  static ChainAlgebra build(const ChainTuple& tuple, const AlphaAssignment& alphas,
                            BuildMode mode = BuildMode::Checked);
  /// Rebuilds an algebra from its exported JSON, taking the structure
  /// constants from the document rather than recomputing them.
  static ChainAlgebra from_json(const nlohmann::json& doc);

  const ModuleLayout& layout() const { return layout_; }
  const AlphaAssignment& alphas() const { return alphas_; }
  int dimension() const { return static_cast<int>(levels_.size()); }
  /// 0 for sl2, i for m_i.
  int level(int idx) const { return levels_.at(static_cast<std::size_t>(idx)); }
  /// "e", "h", "f" or "m<i>_<a>".
  std::string label(int idx) const;
  /// Index of the monomial a of module i (module 0 addresses e, h, f).
  int basis_index(int module, int a) const;
  /// First basis index of module i.
  int module_offset(int module) const { return offsets_.at(static_cast<std::size_t>(module)); }

  /// Stored product of basis vectors i < j.
  const SparseVector& constant(int i, int j) const;
  /// Product of any two basis vectors, by sign flip when i > j.
  SparseVector bracket_basis(int i, int j) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  /// Dense form of bracket(); both arguments must have length dimension().
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  /// The product of basis vectors i and j evaluated straight from the
  /// defining clauses, in the order given, without the stored table.
  SparseVector direct_product(int i, int j) const;

 private:
  ChainAlgebra(ModuleLayout layout, AlphaAssignment alphas);
  std::size_t pair_index(int i, int j) const;

  ModuleLayout layout_;
  AlphaAssignment alphas_;
  std::vector<int> levels_;
  std::vector<int> offsets_;
  std::vector<SparseVector> constants_;  // upper triangle, row-major
};

struct FailingTriple {
  std::array<int, 3> basis{};
  SparseVector residual;
};

struct VerifyReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  /// Number of basis triples i < j < k with nonzero Jacobiator.
  long failing_count = 0;
  /// The first few failures in lexicographic triple order.
  std::vector<FailingTriple> failing_triples;
  long triples_checked = 0;
  int audited_pairs = 0;
};

/// J(x,y,z) = [[x,y],z] + [[z,x],y] + [[y,z],x] on every basis triple
/// i < j < k, plus an audit of antisymmetry that recomputes random pairs in
/// both orders from the defining clauses.
VerifyReport verify(const ChainAlgebra& algebra, unsigned workers = 0, int audit_pairs = 100);

struct SeriesReport {
  /// dim n^k for k = 1, 2, ..., ending with 0.
  std::vector<int> dims;
  /// dim n^k / n^(k+1).
  std::vector<int> general_type;
};

/// n^1 = n, n^(k+1) = [n, n^k] by exact spans. Throws StructuralInconsistency
/// when dim n^k differs from the sum of dim m_s over s >= k.
SeriesReport lower_central_series(const ChainAlgebra& algebra);

struct GradingReport {
  /// [level a, level b] lands in levels >= a + b for a, b >= 1 and in level b
  /// when a = 0.
  bool filtration_ok = true;
  /// [m_1, m_j] reaches m_(j+1) for every j < t.
  bool generated_in_degree_one = true;
};

GradingReport check_grading(const ChainAlgebra& algebra);

nlohmann::json to_json(const ChainAlgebra& algebra);
std::string to_dot(const ChainAlgebra& algebra);

}  // namespace sl2chain
