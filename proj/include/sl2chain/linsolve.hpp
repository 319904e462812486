#pragma once

#include <optional>
#include <vector>

#include "sl2chain/rational.hpp"

namespace sl2chain {

/// Solution space of a homogeneous system A x = 0 over the rationals.
struct LinearSolution {
  int unknowns = 0;
  int rank = 0;
  /// Basis of the null space, each vector in reduced form (the pivot-free
  /// coordinate that parameterizes it is 1).
  std::vector<std::vector<Rational>> nullspace;

  bool zero_only() const { return nullspace.empty(); }
  /// For a one-dimensional solution space in two unknowns (x, y) with y != 0
  /// on the generator: the ratio x / y.
  std::optional<Rational> ratio() const;
};

/// Incremental exact row reduction. Rows are streamed in one at a time and
/// only independent ones are kept, so systems with thousands of redundant
/// equations (one per monomial triple) stay small.
class HomogeneousSystem {
 public:
  explicit HomogeneousSystem(int unknowns);

  /// Adds the equation sum_c row[c] * x_c = 0. Returns true when the row was
  /// independent of the ones already present.
  bool add_row(std::vector<Rational> row);

  int unknowns() const { return unknowns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  bool full_rank() const { return rank() == unknowns_; }

  LinearSolution solve() const;

 private:
  int unknowns_;
  // Reduced rows; pivots_[r] is the pivot column of rows_[r], whose pivot entry is 1.
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

/// One-shot solve of A x = 0 for the given rows.
LinearSolution solve_linear_alpha(const std::vector<std::vector<Rational>>& equations, int unknowns);

/// Rank of a set of vectors by exact elimination.
int rank_of(std::vector<std::vector<Rational>> vectors);

}  // namespace sl2chain
