#include <algorithm>

#include "sl2chain/jacobi.hpp"
#include "sl2chain/parallel.hpp"

namespace sl2chain {

namespace {

/// Each result lands in its own slot, so the output order matches the input
/// order regardless of scheduling.
std::vector<ChainVerdict> check_all(const std::vector<ChainTuple>& candidates,
                                    ChainVerdict (*check)(const ChainTuple&), unsigned workers) {
  std::vector<std::optional<ChainVerdict>> results(candidates.size());
  parallel_for(candidates.size(), workers,
               [&](std::size_t idx) { results[idx] = check(candidates[idx]); });
  std::vector<ChainVerdict> out;
  out.reserve(candidates.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

std::vector<ChainVerdict> only_valid(std::vector<ChainVerdict> all) {
  std::vector<ChainVerdict> out;
  for (auto& v : all) {
    if (v.valid) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const ChainVerdict& a, const ChainVerdict& b) { return a.tuple < b.tuple; });
  return out;
}

}  // namespace

std::vector<ChainVerdict> search(int t, int n1_max, unsigned workers) {
  if (t != 3 && t != 4) throw ArgumentError("search supports tuple lengths 3 and 4");
  if (n1_max < 0) throw ArgumentError("n1_max must be non-negative");

  auto valid3 = only_valid(check_all(enumerate_admissible(3, n1_max), check_chain_t3, workers));
  if (t == 3) return valid3;

  std::vector<ChainTuple> candidates;
  for (const auto& v : valid3) {
    const auto& lay = *v.layout;
    const int bound = std::min(lay.tuple.n(1), lay.degree(3));
    for (int n4 = 0; n4 <= bound; ++n4) {
      auto entries = v.tuple.entries;
      entries.push_back(n4);
      candidates.push_back(ChainTuple{entries});
    }
  }
  return only_valid(check_all(candidates, check_chain_t4, workers));
}

}  // namespace sl2chain
