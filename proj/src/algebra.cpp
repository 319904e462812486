#include "sl2chain/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "sl2chain/linsolve.hpp"
#include "sl2chain/parallel.hpp"

namespace sl2chain {

namespace {

constexpr int kE = 0;
constexpr int kH = 1;
constexpr int kF = 2;

const Sl2Generator kGenerators[3] = {Sl2Generator::E, Sl2Generator::H, Sl2Generator::F};

/// Accumulates sparse contributions keyed by basis index.
class Accumulator {
 public:
  void add(int idx, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[idx];
    slot += c;
    if (slot == 0) terms_.erase(idx);
  }
  void add(const SparseVector& v, const Rational& scale = 1) {
    for (const auto& [idx, c] : v) add(idx, c * scale);
  }
  SparseVector take() const { return SparseVector(terms_.begin(), terms_.end()); }

 private:
  std::map<int, Rational> terms_;
};

SparseVector negate(SparseVector v) {
  for (auto& [idx, c] : v) c = -c;
  return v;
}

/// The sl2 table with [e,h] = -2e, [e,f] = h, [h,f] = -2f in both orders.
SparseVector sl2_product(int a, int b) {
  if (a == b) return {};
  const bool flip = a > b;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  SparseVector v;
  if (lo == kE && hi == kH) v = {{kE, Rational(-2)}};
  if (lo == kE && hi == kF) v = {{kH, Rational(1)}};
  if (lo == kH && hi == kF) v = {{kF, Rational(-2)}};
  return flip ? negate(std::move(v)) : v;
}

void validate_alphas(const ModuleLayout& lay, const AlphaAssignment& alphas, BuildMode mode) {
  const auto skeleton = alpha_skeleton(lay);
  for (const auto& [slot, value] : alphas) {
    const auto it = std::find_if(skeleton.begin(), skeleton.end(),
                                 [&](const ProductSlot& s) { return s.index == slot; });
    if (it == skeleton.end()) {
      throw ArgumentError("alpha" + slot_key(slot) + " is not a product slot of " +
                          to_string(lay.tuple));
    }
    if (mode == BuildMode::Checked && it->status == SlotStatus::ForcedZero && value != 0) {
      throw ArgumentError("alpha" + slot_key(slot) + " must be zero (" + to_string(it->reason) +
                          ")");
    }
  }
  if (mode == BuildMode::Checked) {
    for (const auto& s : skeleton) {
      if (s.status == SlotStatus::Required && alpha_of(alphas, s.index) == 0) {
        throw ArgumentError("alpha" + slot_key(s.index) + " must be nonzero");
      }
    }
  }
}

}  // namespace

ChainAlgebra::ChainAlgebra(ModuleLayout layout, AlphaAssignment alphas)
    : layout_(std::move(layout)), alphas_(std::move(alphas)) {
  levels_ = {0, 0, 0};
  offsets_ = {0};
  for (int i = 1; i <= layout_.t(); ++i) {
    offsets_.push_back(static_cast<int>(levels_.size()));
    for (int a = 0; a < layout_.dim(i); ++a) levels_.push_back(i);
  }
  const auto d = static_cast<std::size_t>(dimension());
  constants_.assign(d * (d - 1) / 2, {});
}

std::size_t ChainAlgebra::pair_index(int i, int j) const {
  if (!(0 <= i && i < j && j < dimension())) {
    throw ArgumentError("basis pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not i < j inside the basis");
  }
  const auto d = static_cast<std::size_t>(dimension());
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  return ui * d - ui * (ui + 1) / 2 + (uj - ui - 1);
}

std::string ChainAlgebra::label(int idx) const {
  if (idx < 0 || idx >= dimension()) throw ArgumentError("basis index out of range");
  if (idx < 3) return idx == kE ? "e" : idx == kH ? "h" : "f";
  const int i = level(idx);
  return "m" + std::to_string(i) + "_" + std::to_string(idx - module_offset(i));
}

int ChainAlgebra::basis_index(int module, int a) const {
  if (module == 0) {
    if (a < 0 || a > 2) throw ArgumentError("sl2 has basis indices 0, 1, 2");
    return a;
  }
  if (module < 1 || module > layout_.t() || a < 0 || a >= layout_.dim(module)) {
    throw ArgumentError("no basis vector m" + std::to_string(module) + "_" + std::to_string(a));
  }
  return module_offset(module) + a;
}

SparseVector ChainAlgebra::direct_product(int i, int j) const {
  const int li = level(i);
  const int lj = level(j);
  if (i == j) return {};
  auto embed = [&](const HomPoly& p, int module) {
    SparseVector v;
    for (int a = 0; a <= p.degree(); ++a) {
      if (p.coeff(a) != 0) v.emplace_back(module_offset(module) + a, p.coeff(a));
    }
    return v;
  };
  auto mono = [&](int idx) {
    const int m = level(idx);
    return monomial(layout_.degree(m), idx - module_offset(m));
  };
  if (li == 0 && lj == 0) return sl2_product(i, j);
  if (li == 0) return embed(act(kGenerators[i], mono(j)), lj);
  if (lj == 0) return negate(embed(act(kGenerators[j], mono(i)), li));
  const auto g = nil_bracket_any(layout_, alphas_, mono(i), li, mono(j), lj);
  SparseVector out;
  for (const auto& [k, p] : g.components) {
    auto part = embed(p, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

ChainAlgebra ChainAlgebra::build(const ChainTuple& tuple, const AlphaAssignment& alphas,
                                 BuildMode mode) {
  if (mode == BuildMode::Checked) {
    const auto report = step1_admissible(tuple);
    if (!report.admissible) {
      throw ArgumentError("tuple " + to_string(tuple) + " is not admissible: " +
                          report.violations.front().message);
    }
  }
  auto lay = sl2chain::layout(tuple);
  validate_alphas(lay, alphas, mode);
  AlphaAssignment stored;
  for (const auto& [k, v] : alphas) {
    if (v != 0) stored[k] = v;
  }
  ChainAlgebra alg(std::move(lay), std::move(stored));
  const int d = alg.dimension();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      // Module-module products beyond m_t vanish without evaluation.
      if (alg.level(i) > 0 && alg.level(i) + alg.level(j) > alg.layout_.t()) continue;
      alg.constants_[alg.pair_index(i, j)] = alg.direct_product(i, j);
    }
  }
  return alg;
}

const SparseVector& ChainAlgebra::constant(int i, int j) const { return constants_[pair_index(i, j)]; }

SparseVector ChainAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  if (i < j) return constant(i, j);
  return negate(constant(j, i));
}

SparseVector ChainAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  Accumulator acc;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      if (i == j) continue;
      acc.add(bracket_basis(i, j), a * b);
    }
  }
  return acc.take();
}

std::vector<Rational> ChainAlgebra::bracket(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dimension() || static_cast<int>(y.size()) != dimension()) {
    throw ArgumentError("element length does not match the algebra dimension " +
                        std::to_string(dimension()));
  }
  auto sparse = [](const std::vector<Rational>& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) s.emplace_back(static_cast<int>(i), v[i]);
    }
    return s;
  };
  std::vector<Rational> out(x.size(), Rational(0));
  for (const auto& [idx, c] : bracket(sparse(x), sparse(y))) out[static_cast<std::size_t>(idx)] = c;
  return out;
}

ChainAlgebra ChainAlgebra::from_json(const nlohmann::json& doc) {
  try {
    const ChainTuple tuple{doc.at("tuple").get<std::vector<int>>()};
    AlphaAssignment alphas;
    for (const auto& [key, value] : doc.at("alphas").items()) {
      alphas[parse_slot_key(key)] = parse_rational(value.get<std::string>());
    }
    ChainAlgebra alg(sl2chain::layout(tuple), std::move(alphas));
    if (doc.at("dimension").get<int>() != alg.dimension()) {
      throw ArgumentError("dimension field disagrees with the tuple layout");
    }
    const auto& basis = doc.at("basis");
    if (static_cast<int>(basis.size()) != alg.dimension()) {
      throw ArgumentError("basis length disagrees with the tuple layout");
    }
    for (int i = 0; i < alg.dimension(); ++i) {
      const auto& entry = basis.at(static_cast<std::size_t>(i));
      if (entry.at("label").get<std::string>() != alg.label(i) || entry.at("level").get<int>() != alg.level(i)) {
        throw ArgumentError("basis entry " + std::to_string(i) + " does not match the layout");
      }
    }
    for (const auto& b : doc.at("brackets")) {
      const int i = b.at("i").get<int>();
      const int j = b.at("j").get<int>();
      SparseVector v;
      for (const auto& term : b.at("result")) {
        const int idx = term.at(0).get<int>();
        if (idx < 0 || idx >= alg.dimension()) throw ArgumentError("result index out of range");
        v.emplace_back(idx, parse_rational(term.at(1).get<std::string>()));
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      alg.constants_[alg.pair_index(i, j)] = std::move(v);
    }
    return alg;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed algebra document: ") + e.what());
  }
}

VerifyReport verify(const ChainAlgebra& alg, unsigned workers, int audit_pairs) {
  VerifyReport report;
  const int d = alg.dimension();
  constexpr std::size_t kKeep = 8;

  // Jacobi, one first index per work item; the merge is ordered by i.
  std::vector<std::vector<FailingTriple>> failures(static_cast<std::size_t>(d));
  std::vector<long> fail_counts(static_cast<std::size_t>(d), 0);
  std::vector<long> checked(static_cast<std::size_t>(d), 0);
  parallel_for(static_cast<std::size_t>(d), workers, [&](std::size_t ui) {
    const int i = static_cast<int>(ui);
    for (int j = i + 1; j < d; ++j) {
      const SparseVector xy = alg.constant(i, j);
      for (int k = j + 1; k < d; ++k) {
        Accumulator acc;
        for (const auto& [idx, c] : xy) acc.add(alg.bracket_basis(idx, k), c);
        for (const auto& [idx, c] : alg.bracket_basis(k, i)) acc.add(alg.bracket_basis(idx, j), c);
        for (const auto& [idx, c] : alg.constant(j, k)) acc.add(alg.bracket_basis(idx, i), c);
        ++checked[ui];
        auto residual = acc.take();
        if (!residual.empty()) {
          ++fail_counts[ui];
          if (failures[ui].size() < kKeep) failures[ui].push_back({{i, j, k}, std::move(residual)});
        }
      }
    }
  });
  for (int i = 0; i < d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    report.triples_checked += checked[ui];
    report.failing_count += fail_counts[ui];
    for (auto& f : failures[ui]) {
      if (report.failing_triples.size() < kKeep) report.failing_triples.push_back(std::move(f));
    }
  }
  report.jacobi_ok = report.failing_count == 0;

  // Antisymmetry audit against the defining clauses.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  for (int n = 0; n < audit_pairs; ++n) {
    const int i = pick(rng);
    const int j = pick(rng);
    const auto forward = alg.direct_product(i, j);
    const auto backward = alg.direct_product(j, i);
    if (forward != negate(backward) || alg.bracket_basis(i, j) != forward) report.antisymmetry_ok = false;
    if (i == j && !forward.empty()) report.antisymmetry_ok = false;
  }
  report.audited_pairs = audit_pairs;
  return report;
}

namespace {

/// Basis of a span of vectors (as independent members of the input).
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim), system_(dim) {}
  void add(const SparseVector& v) {
    if (v.empty() || system_.full_rank()) return;
    std::vector<Rational> dense(static_cast<std::size_t>(dim_), Rational(0));
    for (const auto& [idx, c] : v) dense[static_cast<std::size_t>(idx)] = c;
    if (system_.add_row(std::move(dense))) basis_.push_back(v);
  }
  const std::vector<SparseVector>& basis() const { return basis_; }

 private:
  int dim_;
  HomogeneousSystem system_;
  std::vector<SparseVector> basis_;
};

}  // namespace

SeriesReport lower_central_series(const ChainAlgebra& alg) {
  const int d = alg.dimension();
  const int t = alg.layout().t();
  std::vector<int> nil_basis;
  for (int i = 3; i < d; ++i) nil_basis.push_back(i);

  std::vector<SparseVector> current;
  for (int i : nil_basis) current.push_back({{i, Rational(1)}});

  SeriesReport report;
  report.dims.push_back(static_cast<int>(current.size()));
  while (!current.empty()) {
    SpanBuilder next(d);
    for (int b : nil_basis) {
      for (const auto& v : current) next.add(alg.bracket({{b, Rational(1)}}, v));
    }
    current = next.basis();
    report.dims.push_back(static_cast<int>(current.size()));
    if (static_cast<int>(report.dims.size()) > t + 2) {
      throw StructuralInconsistency("lower central series did not terminate after " +
                                    std::to_string(t) + " steps");
    }
  }

  for (int k = 1; k <= t + 1; ++k) {
    int expected = 0;
    for (int s = k; s <= t; ++s) expected += alg.layout().dim(s);
    const int got = k <= static_cast<int>(report.dims.size()) ? report.dims[static_cast<std::size_t>(k - 1)] : 0;
    if (got != expected) {
      std::ostringstream msg;
      msg << "dim n^" << k << " = " << got << " but the modules predict " << expected;
      throw StructuralInconsistency(msg.str());
    }
  }
  if (static_cast<int>(report.dims.size()) != t + 1) {
    throw StructuralInconsistency("nilradical has the wrong nilpotency index");
  }
  for (std::size_t k = 0; k + 1 < report.dims.size(); ++k) {
    report.general_type.push_back(report.dims[k] - report.dims[k + 1]);
  }
  return report;
}

GradingReport check_grading(const ChainAlgebra& alg) {
  GradingReport report;
  const int d = alg.dimension();
  const int t = alg.layout().t();
  std::vector<bool> reached(static_cast<std::size_t>(t + 2), false);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const int a = alg.level(i);
      const int b = alg.level(j);
      for (const auto& [idx, c] : alg.constant(i, j)) {
        const int l = alg.level(idx);
        if (a == 0 ? l != b : l < a + b) report.filtration_ok = false;
        if (a == 1 && l == b + 1) reached[static_cast<std::size_t>(b + 1)] = true;
      }
    }
  }
  for (int k = 2; k <= t; ++k) {
    if (!reached[static_cast<std::size_t>(k)]) report.generated_in_degree_one = false;
  }
  return report;
}

nlohmann::json to_json(const ChainAlgebra& alg) {
  using nlohmann::json;
  json doc;
  doc["tuple"] = alg.layout().tuple.entries;
  json alphas = json::object();
  for (const auto& [slot, value] : alg.alphas()) alphas[slot_key(slot)] = to_string(value);
  doc["alphas"] = alphas;
  doc["dimension"] = alg.dimension();
  json basis = json::array();
  for (int i = 0; i < alg.dimension(); ++i) {
    basis.push_back({{"label", alg.label(i)}, {"level", alg.level(i)}});
  }
  doc["basis"] = basis;
  json brackets = json::array();
  for (int i = 0; i < alg.dimension(); ++i) {
    for (int j = i + 1; j < alg.dimension(); ++j) {
      const auto& v = alg.constant(i, j);
      if (v.empty()) continue;
      json result = json::array();
      for (const auto& [idx, c] : v) result.push_back(json::array({idx, to_string(c)}));
      brackets.push_back({{"i", i}, {"j", j}, {"result", result}});
    }
  }
  doc["brackets"] = brackets;
  doc["general_type"] = lower_central_series(alg).general_type;
  return doc;
}

std::string to_dot(const ChainAlgebra& alg) {
  const auto series = lower_central_series(alg);
  const int t = alg.layout().t();
  std::ostringstream out;
  out << "digraph ideal_chain {\n  rankdir=BT;\n";
  out << "  g [label=\"𝔤\", dim=" << alg.dimension() << "];\n";
  for (int k = 1; k <= t; ++k) {
    out << "  n" << k << " [label=\"𝔫^" << k << "\", dim=" << series.dims[static_cast<std::size_t>(k - 1)]
        << "];\n";
  }
  out << "  zero [label=\"0\", dim=0];\n";
  out << "  zero -> n" << t << ";\n";
  for (int k = t; k >= 2; --k) out << "  n" << k << " -> n" << k - 1 << ";\n";
  out << "  n1 -> g;\n}\n";
  return out.str();
}

}  // namespace sl2chain
