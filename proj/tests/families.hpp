#pragma once

// Expected chain families as closed-form lists, written independently of the
// checkers they are compared against.

#include <map>
#include <set>
#include <vector>

#include "sl2chain/chainspec.hpp"
#include "sl2chain/rational.hpp"

namespace sl2chain::testing {

/// Three-module chains with n1 <= n1_max: four families valid for every n
/// and five that repeat with period four in n1.
inline std::set<ChainTuple> five_chain_families(int n1_max) {
  std::set<ChainTuple> out;
  auto add = [&](int a, int b, int c) {
    if (a >= 1 && a <= n1_max) out.insert(ChainTuple{{a, b, c}});
  };
  for (int n = 1; n <= n1_max; ++n) {
    add(n, 1, 0);
    if (n >= 2) add(n, 1, 1);
    if (n >= 3) add(n, 1, 3);
    if (n >= 4) add(n, 3, 1);
  }
  for (int n = 0; 4 * n <= n1_max; ++n) {
    if (n >= 2) add(4 * n, 2 * n + 1, 4 * n - 3);
    add(4 * n + 1, 2 * n + 1, 4 * n);
    add(4 * n + 2, 2 * n + 1, 4 * n + 1);
    add(4 * n + 3, 2 * n + 1, 4 * n + 3);
    add(4 * n + 4, 2 * n + 1, 4 * n + 3);
  }
  return out;
}

/// Four-module chains with n1 <= n1_max, mapped to the ratio
/// alpha224 alpha112 / (alpha123 alpha134).
inline std::map<ChainTuple, Rational> six_chain_families(int n1_max) {
  std::map<ChainTuple, Rational> out;
  for (long n = 1; n <= n1_max; ++n) {
    const int k = static_cast<int>(n);
    out[ChainTuple{{k, 1, 0, 0}}] = 0;
    if (n >= 2) {
      out[ChainTuple{{k, 1, 0, 2}}] = make_rational(4 * (4 * n - 3), 3 * (3 * n - 2));
      out[ChainTuple{{k, 1, 1, 1}}] = make_rational(2 * n - 2, 3 * n - 4);
    }
  }
  const std::vector<std::pair<ChainTuple, Rational>> sporadic{
      {ChainTuple{{3, 1, 1, 3}}, make_rational(7, 5)},   {ChainTuple{{3, 1, 3, 1}}, make_rational(-2)},
      {ChainTuple{{4, 1, 3, 3}}, make_rational(3, 2)},   {ChainTuple{{4, 3, 1, 3}}, make_rational(1, 2)},
      {ChainTuple{{5, 1, 3, 5}}, make_rational(22, 21)}, {ChainTuple{{5, 3, 1, 5}}, make_rational(12, 7)},
      {ChainTuple{{6, 1, 3, 5}}, make_rational(1)},
  };
  for (const auto& [t, a] : sporadic) {
    if (t.n(1) <= n1_max) out[t] = a;
  }
  return out;
}

/// Three-tuples listed as admitting no chain structure, with n1 <= n1_max.
inline std::vector<ChainTuple> rejected_triples(int n1_max) {
  std::vector<ChainTuple> out;
  auto add = [&](int a, int b, int c) {
    if (a <= n1_max) out.push_back(ChainTuple{{a, b, c}});
  };
  for (int n = 1; n <= n1_max; ++n) {
    if (n >= 2) add(n, 1, 2);
    if (n >= 4) add(n, 1, 4);
    if (n >= 5) add(n, 1, 5);
    if (n >= 6) add(n, 1, 6);
    if (n >= 3) add(n, 3, 0);
    if (n >= 3) add(n, 3, 2);
    if (n >= 2) add(2 * n, 2 * n - 1, 0);
    if (n >= 3) add(2 * n, 2 * n - 1, 1);
    if (n >= 3) add(2 * n, 2 * n - 1, 2);
    add(2 * n + 1, 2 * n + 1, 0);
  }
  return out;
}

}  // namespace sl2chain::testing
