#include "sl2chain/oracle.hpp"

#include <algorithm>
#include <random>

#include "sl2chain/gordan.hpp"
#include "sl2chain/jacobi.hpp"
#include "sl2chain/parallel.hpp"
#include "sl2chain/sampling.hpp"

namespace sl2chain {

void OracleResult::fail(std::string what) {
  passed = false;
  if (failures.size() < 20) failures.push_back(std::move(what));
}

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

/// Collects per-item results and merges them in item order.
struct Collector {
  std::vector<OracleResult> parts;
  explicit Collector(std::size_t n) : parts(n) {}
  OracleResult merge() const {
    OracleResult out;
    for (const auto& p : parts) {
      out.cases += p.cases;
      for (const auto& f : p.failures) out.fail(f);
      if (!p.passed) out.passed = false;
    }
    return out;
  }
};

}  // namespace

OracleResult gordan_vanishing_suite(int max_degree, int samples, std::uint64_t seed, unsigned workers) {
  const int span = max_degree + 1;
  const auto count = static_cast<std::size_t>(span) * static_cast<std::size_t>(span) *
                     static_cast<std::size_t>(span);
  Collector col(count);
  parallel_for(count, workers, [&](std::size_t item) {
    const int m = static_cast<int>(item) / (span * span);
    const int n = static_cast<int>(item) / span % span;
    const int p = static_cast<int>(item) % span;
    auto& res = col.parts[item];
    std::mt19937_64 rng(seed * 1000003u + item);
    for (int a1 = 0; a1 <= std::min(n, p); ++a1) {
      for (int a2 = 0; a1 + a2 <= p && a2 <= m; ++a2) {
        for (int a3 = 0; a2 + a3 <= m && a3 + a1 <= n; ++a3) {
          const GordanSpec spec{{m, n, p}, {a1, a2, a3}};
          if (!spec.hypothesis_holds()) continue;
          const auto expansion = gordan_expansion(spec.degrees, {0, 1, 2}, spec.exponents);
          for (int s = 0; s < samples; ++s) {
            ++res.cases;
            const auto value = expansion.evaluate(
                {random_hompoly(m, rng), random_hompoly(n, rng), random_hompoly(p, rng)});
            if (!value.is_zero()) {
              res.fail("degrees " + triple_str(m, n, p) + " exponents " + triple_str(a1, a2, a3) +
                       ": " + to_string(value));
              break;
            }
          }
        }
      }
    }
  });
  return col.merge();
}

OracleResult proof_replay_suite(int n_max, int samples, std::uint64_t seed) {
  OracleResult res;
  std::mt19937_64 rng(seed);
  for (const auto& r : proof_replays(n_max)) {
    const std::string name = r.family + " n=" + std::to_string(r.parameter);
    const auto& deg = r.gordan.degrees();
    const auto lay = layout(r.tuple);
    AlphaAssignment alphas = unit_required_alphas(lay);
    if (r.tuple.length() == 4) {
      // The formal expression carries the family's closed-form ratio; the
      // bracket uses whatever the checker solved for.
      const ChainVerdict v = check_chain_t4(r.tuple);
      if (!v.valid) {
        res.fail(name + ": checker rejects " + to_string(r.tuple));
        continue;
      }
      alphas = v.alphas;
    }
    for (int s = 0; s < samples; ++s) {
      ++res.cases;
      const std::array<HomPoly, 3> args{random_hompoly(deg[0], rng), random_hompoly(deg[1], rng),
                                        random_hompoly(deg[2], rng)};
      const HomPoly g = r.gordan.evaluate(args);
      const HomPoly j = r.jacobi.evaluate(args);
      const int wmod = r.tuple.length() == 4 ? 2 : 1;
      const auto engine = jacobi_residual(lay, alphas, args[0], 1, args[1], 1, args[2], wmod);
      if (!g.is_zero()) res.fail(name + ": Gordan combination is " + to_string(g));
      if (!j.is_zero()) res.fail(name + ": Jacobi expression is " + to_string(j));
      if (!engine.is_zero()) res.fail(name + ": nilradical Jacobiator is nonzero");
      if (!g.is_zero() || !j.is_zero() || !engine.is_zero()) break;
    }
  }
  return res;
}

namespace {

ChainVerdict specialized(const ChainTuple& t) {
  return t.length() == 3 ? check_chain_t3(t) : check_chain_t4(t);
}

AlphaAssignment random_skeleton_alphas(const ModuleLayout& lay, std::mt19937_64& rng) {
  AlphaAssignment out;
  for (const auto& s : alpha_skeleton(lay)) {
    if (s.status == SlotStatus::Required) out[s.index] = random_nonzero_rational(rng);
    if (s.status == SlotStatus::Candidate) out[s.index] = random_rational(rng);
  }
  return out;
}

void compare_one(const ChainTuple& tuple, std::mt19937_64& rng, OracleResult& res) {
  const std::string name = to_string(tuple);
  ++res.cases;
  const ChainVerdict v = specialized(tuple);
  if (v.stage == VerdictStage::Inadmissible) {
    const auto g = check_chain_general(tuple, {});
    if (g.stage != VerdictStage::Inadmissible) res.fail(name + ": general checker admits it");
    return;
  }
  const auto& lay = *v.layout;
  if (!v.valid) {
    if (check_chain_general(tuple, v.alphas).valid) {
      res.fail(name + ": general checker accepts the rejected normalization");
    }
    if (check_chain_general(tuple, random_skeleton_alphas(lay, rng)).valid) {
      res.fail(name + ": general checker accepts a random assignment");
    }
    return;
  }
  const auto& cs = *v.constraints;
  if (!check_chain_general(tuple, v.alphas).valid) {
    res.fail(name + ": general checker rejects the normalized assignment");
  }
  for (int k = 0; k < 2; ++k) {
    const auto alphas = random_instantiation(v, rng);
    if (!satisfies(cs, alphas)) res.fail(name + ": random instantiation breaks the constraints");
    if (!check_chain_general(tuple, alphas).valid) {
      res.fail(name + ": general checker rejects a constraint-satisfying assignment");
    }
  }
  // Constraints must be sharp: moving a pinned value breaks Jacobi.
  const auto skeleton = alpha_skeleton(lay);
  for (const auto& s : cs.zeros) {
    const auto it = std::find_if(skeleton.begin(), skeleton.end(),
                                 [&](const ProductSlot& p) { return p.index == s; });
    if (it->status == SlotStatus::ForcedZero) continue;
    AlphaAssignment alphas = v.alphas;
    alphas[s] = 1;
    if (check_chain_general(tuple, alphas).valid) {
      res.fail(name + ": alpha" + slot_key(s) + " is reported zero but 1 also works");
    }
  }
  for (const auto& r : cs.ratios) {
    AlphaAssignment alphas = v.alphas;
    alphas[r.slot] = alpha_of(alphas, r.slot) + 1;
    if (check_chain_general(tuple, alphas).valid) {
      res.fail(name + ": the ratio for alpha" + slot_key(r.slot) + " is not unique");
    }
  }
  for (const auto& rel : cs.relations) {
    AlphaAssignment alphas = random_instantiation(v, rng);
    alphas[rel.terms.front().first] += 1;
    if (satisfies(cs, alphas) || check_chain_general(tuple, alphas).valid) {
      res.fail(name + ": relation is not sharp");
    }
  }
}

}  // namespace

OracleResult equivalence_suite(int t, int n1_max, std::uint64_t seed, unsigned workers) {
  if (t != 3 && t != 4) throw ArgumentError("equivalence suite supports t = 3 and t = 4");
  const auto tuples = enumerate_admissible(t, n1_max);
  Collector col(tuples.size());
  parallel_for(tuples.size(), workers, [&](std::size_t i) {
    std::mt19937_64 rng(seed * 7919u + i);
    compare_one(tuples[i], rng, col.parts[i]);
  });
  return col.merge();
}

}  // namespace sl2chain
