#include "sl2chain/linsolve.hpp"

#include <algorithm>
#include <string>

namespace sl2chain {

std::optional<Rational> LinearSolution::ratio() const {
  if (unknowns != 2 || nullspace.size() != 1) return std::nullopt;
  const auto& v = nullspace.front();
  if (v[1] == 0) return std::nullopt;
  return v[0] / v[1];
}

HomogeneousSystem::HomogeneousSystem(int unknowns) : unknowns_(unknowns) {
  if (unknowns < 0) throw ArgumentError("negative number of unknowns");
}

bool HomogeneousSystem::add_row(std::vector<Rational> row) {
  if (static_cast<int>(row.size()) != unknowns_) {
    throw ArgumentError("row has " + std::to_string(row.size()) + " entries, expected " +
                        std::to_string(unknowns_));
  }
  if (full_rank()) return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (row[static_cast<std::size_t>(p)] == 0) continue;
    const Rational factor = row[static_cast<std::size_t>(p)];
    for (int c = 0; c < unknowns_; ++c) {
      row[static_cast<std::size_t>(c)] -= factor * rows_[r][static_cast<std::size_t>(c)];
    }
  }
  const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
  if (lead == row.end()) return false;
  const int p = static_cast<int>(lead - row.begin());
  const Rational inv = 1 / Rational(*lead);
  for (auto& v : row) v *= inv;
  // Keep the basis fully reduced: clear the new pivot column from older rows.
  for (auto& old : rows_) {
    const Rational factor = old[static_cast<std::size_t>(p)];
    if (factor == 0) continue;
    for (int c = 0; c < unknowns_; ++c) {
      old[static_cast<std::size_t>(c)] -= factor * row[static_cast<std::size_t>(c)];
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

LinearSolution HomogeneousSystem::solve() const {
  LinearSolution sol;
  sol.unknowns = unknowns_;
  sol.rank = rank();
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns_), false);
  for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
  for (int free_col = 0; free_col < unknowns_; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(unknowns_), Rational(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      v[static_cast<std::size_t>(pivots_[r])] = -rows_[r][static_cast<std::size_t>(free_col)];
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

LinearSolution solve_linear_alpha(const std::vector<std::vector<Rational>>& equations, int unknowns) {
  HomogeneousSystem system(unknowns);
  for (const auto& row : equations) {
    system.add_row(row);
    if (system.full_rank()) break;
  }
  return system.solve();
}

int rank_of(std::vector<std::vector<Rational>> vectors) {
  if (vectors.empty()) return 0;
  HomogeneousSystem system(static_cast<int>(vectors.front().size()));
  for (auto& v : vectors) {
    system.add_row(std::move(v));
    if (system.full_rank()) break;
  }
  return system.rank();
}

}  // namespace sl2chain
