#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sl2chain {

struct OracleResult {
  bool passed = true;
  long cases = 0;
  /// Human-readable description of each failing case (capped).
  std::vector<std::string> failures;

  void fail(std::string what);
};

/// For every degree triple (m, n, p) up to max_degree and every exponent
/// triple meeting the Gordan hypothesis, the bracket vanishes on `samples`
/// random rational argument triples.
OracleResult gordan_vanishing_suite(int max_degree, int samples, std::uint64_t seed = 1,
                                    unsigned workers = 0);

/// Each proof-replay combination with parameter up to n_max vanishes on
/// random arguments, and so does the Jacobi expression it replaces, both as a
/// formal combination and through the nilradical bracket.
OracleResult proof_replay_suite(int n_max, int samples = 3, std::uint64_t seed = 2);

/// check_chain_general against the specialized checker on every admissible
/// tuple of length t (3 or 4) with n1 <= n1_max: the verdicts agree, random
/// assignments satisfying the returned constraints pass, and breaking a
/// pinned constraint fails.
OracleResult equivalence_suite(int t, int n1_max, std::uint64_t seed = 3, unsigned workers = 0);

}  // namespace sl2chain
