#include "sl2chain/jacobi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sl2chain/linsolve.hpp"
#include "sl2chain/sampling.hpp"
#include "sl2chain/transvection.hpp"

namespace sl2chain {

Rational alpha_of(const AlphaAssignment& alphas, const SlotIndex& slot) {
  const auto it = alphas.find(slot);
  return it == alphas.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------
// GradedElement

bool GradedElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

void GradedElement::add(int i, const HomPoly& p) {
  auto it = components.find(i);
  if (it == components.end()) {
    components.emplace(i, p);
  } else {
    it->second += p;
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  for (const auto& [i, p] : other.components) add(i, p);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) {
  for (const auto& [i, p] : other.components) add(i, -p);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& s) {
  for (auto& [i, p] : components) p *= s;
  return *this;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  GradedElement diff = a;
  diff -= b;
  return diff.is_zero();
}

// ---------------------------------------------------------------------------
// Brackets inside the nilradical

namespace {

void check_module(const ModuleLayout& lay, const HomPoly& p, int i) {
  if (i < 1 || i > lay.t()) {
    throw ArgumentError("module index " + std::to_string(i) + " outside 1.." + std::to_string(lay.t()));
  }
  if (p.degree() != lay.degree(i)) {
    throw ArgumentError("element of degree " + std::to_string(p.degree()) + " placed in m" +
                        std::to_string(i) + " of degree " + std::to_string(lay.degree(i)));
  }
}

}  // namespace

GradedElement nil_bracket(const ModuleLayout& lay, const AlphaAssignment& alphas, const HomPoly& u,
                          int i, const HomPoly& v, int j) {
  check_module(lay, u, i);
  check_module(lay, v, j);
  if (i > j) throw ArgumentError("nil_bracket expects i <= j; use nil_bracket_any");
  GradedElement out;
  for (int k = i + j; k <= lay.t(); ++k) {
    const SlotIndex slot{i, j, k};
    const Rational alpha = alpha_of(alphas, slot);
    if (alpha == 0) continue;
    const auto c = c_index(lay, i, j, k);
    if (!c) {
      throw ArgumentError("nonzero alpha on product slot " + slot_key(slot) +
                          " which has no transvection");
    }
    out.add(k, transvection(u, v, *c) * alpha);
  }
  return out;
}

GradedElement nil_bracket_any(const ModuleLayout& lay, const AlphaAssignment& alphas,
                              const HomPoly& u, int i, const HomPoly& v, int j) {
  if (i <= j) return nil_bracket(lay, alphas, u, i, v, j);
  GradedElement out = nil_bracket(lay, alphas, v, j, u, i);
  out *= Rational(-1);
  return out;
}

GradedElement nil_bracket(const ModuleLayout& lay, const AlphaAssignment& alphas,
                          const GradedElement& x, const GradedElement& y) {
  GradedElement out;
  for (const auto& [i, u] : x.components) {
    if (u.is_zero()) continue;
    for (const auto& [j, v] : y.components) {
      if (v.is_zero() || i + j > lay.t()) continue;
      out += nil_bracket_any(lay, alphas, u, i, v, j);
    }
  }
  return out;
}

GradedElement jacobi_residual(const ModuleLayout& lay, const AlphaAssignment& alphas,
                              const HomPoly& u, int i, const HomPoly& v, int j, const HomPoly& w,
                              int k) {
  check_module(lay, u, i);
  check_module(lay, v, j);
  check_module(lay, w, k);
  GradedElement out;
  if (i + j + k > lay.t()) return out;
  GradedElement gu, gv, gw;
  gu.add(i, u);
  gv.add(j, v);
  gw.add(k, w);
  out += nil_bracket(lay, alphas, gu, nil_bracket(lay, alphas, gv, gw));
  out += nil_bracket(lay, alphas, gv, nil_bracket(lay, alphas, gw, gu));
  out += nil_bracket(lay, alphas, gw, nil_bracket(lay, alphas, gu, gv));
  return out;
}

// ---------------------------------------------------------------------------
// Constraints

bool satisfies(const AlphaConstraintSet& cs, const AlphaAssignment& alphas) {
  for (const auto& s : cs.zeros) {
    if (alpha_of(alphas, s) != 0) return false;
  }
  for (const auto& s : cs.required_nonzero) {
    if (alpha_of(alphas, s) == 0) return false;
  }
  for (const auto& r : cs.ratios) {
    // alpha_slot * alpha_b1 == value * alpha_b2 * alpha_b3, with basis = {slot, b1, b2, b3}.
    const Rational lhs = alpha_of(alphas, r.basis[0]) * alpha_of(alphas, r.basis[1]);
    const Rational rhs = r.value * alpha_of(alphas, r.basis[2]) * alpha_of(alphas, r.basis[3]);
    if (lhs != rhs) return false;
  }
  for (const auto& rel : cs.relations) {
    Rational sum = 0;
    for (const auto& term : rel.terms) {
      sum += term.coefficient * alpha_of(alphas, term.first) * alpha_of(alphas, term.second);
    }
    if (sum != 0) return false;
  }
  return true;
}

AlphaAssignment unit_required_alphas(const ModuleLayout& lay) {
  AlphaAssignment out;
  for (const auto& slot : alpha_skeleton(lay)) {
    if (slot.status == SlotStatus::Required) out[slot.index] = 1;
  }
  return out;
}

namespace {

const SlotIndex kS112{1, 1, 2};
const SlotIndex kS113{1, 1, 3};
const SlotIndex kS114{1, 1, 4};
const SlotIndex kS123{1, 2, 3};
const SlotIndex kS124{1, 2, 4};
const SlotIndex kS134{1, 3, 4};
const SlotIndex kS224{2, 2, 4};

const ProductSlot& find_slot(const std::vector<ProductSlot>& skeleton, const SlotIndex& s) {
  for (const auto& slot : skeleton) {
    if (slot.index == s) return slot;
  }
  throw ArgumentError("product slot " + slot_key(s) + " does not exist for this tuple");
}

bool is_open(const std::vector<ProductSlot>& skeleton, const SlotIndex& s) {
  return find_slot(skeleton, s).status != SlotStatus::ForcedZero;
}

/// Coefficient of (x^a', (y, z)_inner)_outer on monomials: the inner product
/// lands on one monomial, and so does the outer one.
Rational nested(const TransvectionTable& outer, int x, const TransvectionTable& inner, int y, int z) {
  const Rational& ci = inner.at(y, z);
  if (ci == 0) return 0;
  const int idx = y + z - inner.order();
  const Rational& co = outer.at(x, idx);
  if (co == 0) return 0;
  return ci * co;
}

Witness make_witness(const ModuleLayout& lay, const AlphaAssignment& alphas,
                     std::array<int, 3> modules, std::array<int, 3> exponents) {
  Witness w{modules, exponents, alphas, {}};
  w.residual = jacobi_residual(lay, alphas, monomial(lay.degree(modules[0]), exponents[0]), modules[0],
                               monomial(lay.degree(modules[1]), exponents[1]), modules[1],
                               monomial(lay.degree(modules[2]), exponents[2]), modules[2]);
  if (w.residual.is_zero()) {
    // The table route and the polynomial route disagree: a bug, not a verdict.
    throw std::logic_error("witness residual vanished on re-evaluation for " +
                           to_string(lay.tuple));
  }
  return w;
}

struct Prelude {
  ChainVerdict verdict;
  std::vector<ProductSlot> skeleton;
  bool admissible = false;
};

Prelude start_verdict(const ChainTuple& tuple) {
  Prelude p;
  p.verdict.tuple = tuple;
  const auto report = step1_admissible(tuple);
  if (!report.admissible) {
    p.verdict.stage = VerdictStage::Inadmissible;
    p.verdict.violations = report.violations;
    try {
      p.verdict.layout = layout(tuple);
    } catch (const InadmissibleTuple&) {
    }
    return p;
  }
  p.verdict.layout = layout(tuple);
  p.skeleton = alpha_skeleton(*p.verdict.layout);
  p.admissible = true;
  return p;
}

/// First monomial triple a <= b <= c of m_1 on which
/// sum_cyc (u, (v, w)_n2)_n3 does not vanish.
std::optional<std::array<int, 3>> first_cyclic_failure(const ModuleLayout& lay) {
  const int d1 = lay.degree(1);
  const int n2 = lay.tuple.n(2);
  const int n3 = lay.tuple.n(3);
  const TransvectionTable t112(d1, d1, n2);
  const TransvectionTable t123(d1, lay.degree(2), n3);
  const int d3 = lay.degree(3);
  for (int a = 0; a <= d1; ++a) {
    for (int b = a; b <= d1; ++b) {
      for (int c = b; c <= d1; ++c) {
        const int s = a + b + c - n2 - n3;
        if (s < 0 || s > d3) continue;
        const Rational r = nested(t123, a, t112, b, c) + nested(t123, b, t112, c, a) +
                           nested(t123, c, t112, a, b);
        if (r != 0) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

AlphaConstraintSet base_constraints(const std::vector<ProductSlot>& skeleton) {
  AlphaConstraintSet cs;
  for (const auto& slot : skeleton) {
    switch (slot.status) {
      case SlotStatus::Required: cs.required_nonzero.insert(slot.index); break;
      case SlotStatus::ForcedZero: cs.zeros.insert(slot.index); break;
      case SlotStatus::Candidate: break;
    }
  }
  return cs;
}

}  // namespace

// ---------------------------------------------------------------------------
// Checkers

ChainVerdict check_chain_t3(const ChainTuple& tuple) {
  if (tuple.length() != 3) throw ArgumentError("check_chain_t3 needs a tuple of length 3");
  auto p = start_verdict(tuple);
  if (!p.admissible) return p.verdict;
  auto& v = p.verdict;
  const auto& lay = *v.layout;
  v.alphas = unit_required_alphas(lay);

  if (const auto fail = first_cyclic_failure(lay)) {
    v.stage = VerdictStage::JacobiFailure;
    v.witness = make_witness(lay, v.alphas, {1, 1, 1}, *fail);
    return v;
  }
  auto cs = base_constraints(p.skeleton);
  if (is_open(p.skeleton, kS113)) cs.free.insert(kS113);
  v.constraints = std::move(cs);
  v.valid = true;
  v.stage = VerdictStage::Valid;
  return v;
}

ChainVerdict check_chain_t4(const ChainTuple& tuple) {
  if (tuple.length() != 4) throw ArgumentError("check_chain_t4 needs a tuple of length 4");
  auto p = start_verdict(tuple);
  if (!p.admissible) return p.verdict;
  auto& v = p.verdict;
  const auto& lay = *v.layout;
  const auto& sk = p.skeleton;
  v.alphas = unit_required_alphas(lay);

  const int d1 = lay.degree(1);
  const int d2 = lay.degree(2);
  const int d3 = lay.degree(3);
  const int n2 = tuple.n(2);
  const int n3 = tuple.n(3);
  const int n4 = tuple.n(4);

  // Case (a), m_3 projection: the t = 3 identity.
  if (const auto fail = first_cyclic_failure(lay)) {
    v.stage = VerdictStage::JacobiFailure;
    v.witness = make_witness(lay, v.alphas, {1, 1, 1}, *fail);
    return v;
  }

  AlphaConstraintSet cs = base_constraints(sk);
  if (is_open(sk, kS114)) cs.free.insert(kS114);  // lands in the centre

  // Case (a), m_4 projection: alpha124 alpha112 S1 + alpha134 alpha113 S2 = 0.
  const TransvectionTable t112(d1, d1, n2);
  std::vector<SlotIndex> unknowns;
  std::optional<TransvectionTable> t124, t113, t134_a;
  if (is_open(sk, kS124)) {
    unknowns.push_back(kS124);
    t124.emplace(d1, d2, *find_slot(sk, kS124).order);
  }
  if (is_open(sk, kS113)) {
    unknowns.push_back(kS113);
    t113.emplace(d1, d1, *find_slot(sk, kS113).order);
    t134_a.emplace(d1, d3, n4);
  }
  if (!unknowns.empty()) {
    HomogeneousSystem system(static_cast<int>(unknowns.size()));
    for (int a = 0; a <= d1 && !system.full_rank(); ++a) {
      for (int b = a; b <= d1 && !system.full_rank(); ++b) {
        for (int c = b; c <= d1 && !system.full_rank(); ++c) {
          std::vector<Rational> row;
          if (t124) {
            row.push_back(nested(*t124, a, t112, b, c) + nested(*t124, b, t112, c, a) +
                          nested(*t124, c, t112, a, b));
          }
          if (t113) {
            row.push_back(nested(*t134_a, a, *t113, b, c) + nested(*t134_a, b, *t113, c, a) +
                          nested(*t134_a, c, *t113, a, b));
          }
          system.add_row(std::move(row));
        }
      }
    }
    const auto sol = system.solve();
    if (sol.nullspace.size() == unknowns.size()) {
      for (const auto& s : unknowns) cs.free.insert(s);
    } else if (sol.zero_only()) {
      for (const auto& s : unknowns) cs.zeros.insert(s);
    } else {
      // Two unknowns, one-dimensional solutions (alpha124, alpha113) ~ (g0, g1).
      const auto& g = sol.nullspace.front();
      if (g[0] == 0) {
        cs.zeros.insert(kS124);
        cs.free.insert(kS113);
      } else if (g[1] == 0) {
        cs.zeros.insert(kS113);
        cs.free.insert(kS124);
      } else {
        // g1 * (alpha124 alpha112) - g0 * (alpha134 alpha113) = 0
        cs.relations.push_back(ProductRelation{{{kS124, kS112, g[1]}, {kS134, kS113, -g[0]}}});
      }
    }
  }

  // Case (b): u, v in m_1, w in m_2.
  //   beta * [(u,(v,w)_n3)_n4 - (v,(u,w)_n3)_n4] + alpha * (w,(u,v)_n2)_c224 = 0
  // with beta = alpha134 alpha123 != 0 and alpha = alpha224 alpha112.
  const bool open224 = is_open(sk, kS224);
  const TransvectionTable t123(d1, d2, n3);
  const TransvectionTable t134(d1, d3, n4);
  std::optional<TransvectionTable> t224;
  if (open224) t224.emplace(d2, d2, *find_slot(sk, kS224).order);

  struct Row {
    int a, b, c;
    Rational l, r;
  };
  std::vector<Row> rows;
  HomogeneousSystem system(open224 ? 2 : 1);
  for (int a = 0; a <= d1; ++a) {
    for (int b = a; b <= d1; ++b) {
      for (int c = 0; c <= d2; ++c) {
        Rational l = nested(t134, a, t123, b, c) - nested(t134, b, t123, a, c);
        Rational r = t224 ? nested(*t224, c, t112, a, b) : Rational(0);
        if (l == 0 && r == 0) continue;
        if (open224) {
          system.add_row({l, r});
        } else {
          system.add_row({l});
        }
        rows.push_back({a, b, c, std::move(l), std::move(r)});
      }
    }
  }
  const auto sol = system.solve();
  std::optional<Rational> alpha;  // alpha224 under the normalization
  bool free224 = false;
  bool ok = false;
  if (!open224) {
    ok = !sol.zero_only();
  } else if (sol.nullspace.size() == 2) {
    ok = true;
    free224 = true;
  } else if (sol.nullspace.size() == 1 && sol.nullspace.front()[0] != 0) {
    ok = true;
    alpha = sol.nullspace.front()[1] / sol.nullspace.front()[0];
  }

  if (!ok) {
    // Pick the alpha the first informative equation asks for and show a triple
    // that contradicts it.
    Rational trial = 0;
    for (const auto& row : rows) {
      if (row.r != 0) {
        trial = -row.l / row.r;
        break;
      }
    }
    for (const auto& row : rows) {
      if (row.l + trial * row.r != 0) {
        AlphaAssignment alphas = v.alphas;
        if (open224 && trial != 0) alphas[kS224] = trial;
        v.stage = VerdictStage::JacobiFailure;
        v.witness = make_witness(lay, alphas, {1, 1, 2}, {row.a, row.b, row.c});
        v.alphas = alphas;
        return v;
      }
    }
    throw std::logic_error("case (b) rejected without a failing equation for " + to_string(tuple));
  }

  if (!open224) {
    // already in zeros via the skeleton
  } else if (free224) {
    cs.free.insert(kS224);
  } else {
    cs.ratios.push_back(RatioConstraint{kS224, *alpha, {kS224, kS112, kS123, kS134}});
    if (*alpha != 0) v.alphas[kS224] = *alpha;
  }
  v.constraints = std::move(cs);
  v.valid = true;
  v.stage = VerdictStage::Valid;
  return v;
}

ChainVerdict check_chain_general(const ChainTuple& tuple, const AlphaAssignment& alphas) {
  auto p = start_verdict(tuple);
  p.verdict.alphas = alphas;
  if (!p.admissible) return p.verdict;
  auto& v = p.verdict;
  const auto& lay = *v.layout;

  for (const auto& [slot, value] : alphas) {
    const auto& s = find_slot(p.skeleton, slot);
    if (s.status == SlotStatus::ForcedZero && value != 0) {
      throw ArgumentError("alpha" + slot_key(slot) + " must be zero (" + to_string(s.reason) + ")");
    }
  }
  for (const auto& s : p.skeleton) {
    if (s.status == SlotStatus::Required && alpha_of(alphas, s.index) == 0) {
      throw ArgumentError("alpha" + slot_key(s.index) + " must be nonzero");
    }
  }

  const int t = lay.t();
  for (int i = 1; i <= t; ++i) {
    for (int j = i; i + j <= t; ++j) {
      for (int k = j; i + j + k <= t; ++k) {
        for (int a = 0; a <= lay.degree(i); ++a) {
          const HomPoly u = monomial(lay.degree(i), a);
          for (int b = (i == j ? a : 0); b <= lay.degree(j); ++b) {
            const HomPoly w1 = monomial(lay.degree(j), b);
            for (int c = (j == k ? b : 0); c <= lay.degree(k); ++c) {
              auto r = jacobi_residual(lay, alphas, u, i, w1, j, monomial(lay.degree(k), c), k);
              if (!r.is_zero()) {
                v.stage = VerdictStage::JacobiFailure;
                v.witness = Witness{{i, j, k}, {a, b, c}, alphas, std::move(r)};
                return v;
              }
            }
          }
        }
      }
    }
  }

  AlphaConstraintSet cs = base_constraints(p.skeleton);
  for (const auto& s : p.skeleton) {
    if (s.status == SlotStatus::Candidate) {
      if (alpha_of(alphas, s.index) == 0) {
        cs.zeros.insert(s.index);
      } else {
        cs.free.insert(s.index);
      }
    }
  }
  v.constraints = std::move(cs);
  v.valid = true;
  v.stage = VerdictStage::Valid;
  return v;
}

AlphaAssignment random_instantiation(const ChainVerdict& verdict, std::mt19937_64& rng) {
  if (!verdict.valid || !verdict.constraints) {
    throw ArgumentError("random_instantiation needs a valid verdict");
  }
  const auto& cs = *verdict.constraints;
  AlphaAssignment out;
  for (const auto& s : cs.required_nonzero) out[s] = random_nonzero_rational(rng);
  for (const auto& s : cs.free) out[s] = random_rational(rng);
  for (const auto& rel : cs.relations) {
    // Two-term relation c0 * a0 * b0 + c1 * a1 * b1 = 0: choose a0, solve a1.
    if (rel.terms.size() != 2) throw std::logic_error("unsupported relation shape");
    for (const auto& term : rel.terms) {
      for (const auto& s : {term.first, term.second}) {
        if (!out.count(s)) out[s] = random_rational(rng);
      }
    }
    // Solve for a scalar that is not required, against a nonzero partner.
    bool solved = false;
    for (std::size_t t = 0; t < 2 && !solved; ++t) {
      const auto& mine = rel.terms[t];
      const auto& other = rel.terms[1 - t];
      const Rational rest = other.coefficient * alpha_of(out, other.first) * alpha_of(out, other.second);
      for (const auto& [var, partner] : {std::pair{mine.first, mine.second}, std::pair{mine.second, mine.first}}) {
        if (cs.required_nonzero.count(var) || alpha_of(out, partner) == 0) continue;
        out[var] = -rest / (mine.coefficient * alpha_of(out, partner));
        solved = true;
        break;
      }
    }
    if (!solved) throw std::logic_error("relation has no solvable scalar");
  }
  for (const auto& r : cs.ratios) {
    out[r.basis[0]] = r.value * alpha_of(out, r.basis[2]) * alpha_of(out, r.basis[3]) /
                      alpha_of(out, r.basis[1]);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace sl2chain
