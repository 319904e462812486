#include "sl2chain/gordan.hpp"

#include <algorithm>
#include <tuple>

#include "sl2chain/transvection.hpp"

namespace sl2chain {

bool GordanSpec::hypothesis_holds() const {
  const auto [m, n, p] = degrees;
  const auto [a1, a2, a3] = exponents;
  if (a1 < 0 || a2 < 0 || a3 < 0) return false;
  return a1 + a2 <= p && a2 + a3 <= m && a3 + a1 <= n && (a1 == 0 || a2 + a3 == m);
}

namespace {

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

void check_slot(int s) {
  if (s < 0 || s > 2) throw ArgumentError("argument slot must be 0, 1 or 2");
}

}  // namespace

FormalCombination::FormalCombination(std::array<int, 3> degrees) : degrees_(degrees) {
  for (int d : degrees_) {
    if (d < 0) throw ArgumentError("negative argument degree");
  }
}

void FormalCombination::add(const Rational& c, int left, int right, int outer, int inner_order,
                            int outer_order) {
  check_slot(left);
  check_slot(right);
  check_slot(outer);
  const auto deg = [&](int s) { return degrees_[static_cast<std::size_t>(s)]; };
  if (inner_order < 0 || inner_order > std::min(deg(left), deg(right))) {
    throw ArgumentError("inner transvection order " + std::to_string(inner_order) +
                        " out of range for degrees " + std::to_string(deg(left)) + ", " +
                        std::to_string(deg(right)));
  }
  const int inner_degree = deg(left) + deg(right) - 2 * inner_order;
  if (outer_order < 0 || outer_order > std::min(inner_degree, deg(outer))) {
    throw ArgumentError("outer transvection order " + std::to_string(outer_order) +
                        " out of range for degrees " + std::to_string(inner_degree) + ", " +
                        std::to_string(deg(outer)));
  }
  if (c == 0) return;
  Rational coef = c;
  if (left > right) {
    std::swap(left, right);
    coef *= sign(inner_order);
  }
  if (left == right && inner_order % 2 == 1) return;
  const IteratedKey key{left, right, outer, inner_order, outer_order};
  auto& slot = terms_[key];
  slot += coef;
  if (slot == 0) terms_.erase(key);
}

void FormalCombination::add_right_nested(const Rational& c, int single, int left, int right,
                                         int inner_order, int outer_order) {
  add(c * sign(outer_order), left, right, single, inner_order, outer_order);
}

void FormalCombination::add(const FormalCombination& other, const Rational& c) {
  if (other.degrees_ != degrees_) throw ArgumentError("combinations over different degrees");
  for (const auto& [k, v] : other.terms_) {
    add(c * v, k.left, k.right, k.outer, k.inner_order, k.outer_order);
  }
}

std::optional<Rational> FormalCombination::ratio_to(const FormalCombination& other) const {
  if (other.is_zero()) return std::nullopt;
  const auto& [key0, val0] = *other.terms_.begin();
  const auto it = terms_.find(key0);
  const Rational r = it == terms_.end() ? Rational(0) : Rational(it->second / val0);
  FormalCombination diff = *this;
  diff.add(other, -r);
  if (!diff.is_zero()) return std::nullopt;
  return r;
}

HomPoly FormalCombination::evaluate(const std::array<HomPoly, 3>& args) const {
  for (std::size_t s = 0; s < 3; ++s) {
    if (args[s].degree() != degrees_[s]) {
      throw ArgumentError("argument " + std::to_string(s) + " has degree " +
                          std::to_string(args[s].degree()) + ", expected " +
                          std::to_string(degrees_[s]));
    }
  }
  std::map<std::tuple<int, int, int>, HomPoly> inner_cache;
  std::optional<HomPoly> total;
  for (const auto& [k, c] : terms_) {
    const auto inner_key = std::make_tuple(k.left, k.right, k.inner_order);
    auto it = inner_cache.find(inner_key);
    if (it == inner_cache.end()) {
      it = inner_cache
               .emplace(inner_key, transvection(args[static_cast<std::size_t>(k.left)],
                                                args[static_cast<std::size_t>(k.right)],
                                                k.inner_order))
               .first;
    }
    HomPoly term = transvection(it->second, args[static_cast<std::size_t>(k.outer)], k.outer_order) * c;
    if (!total) {
      total = std::move(term);
    } else if (total->degree() != term.degree()) {
      throw ArgumentError("combination mixes result degrees " + std::to_string(total->degree()) +
                          " and " + std::to_string(term.degree()));
    } else {
      *total += term;
    }
  }
  return total ? *total : HomPoly(0);
}

std::string to_string(const FormalCombination& c, const std::array<std::string, 3>& names) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [k, v] : c.terms()) {
    const bool negative = v < 0;
    const Rational mag = negative ? Rational(-v) : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "((" + names[static_cast<std::size_t>(k.left)] + "," +
           names[static_cast<std::size_t>(k.right)] + ")_" + std::to_string(k.inner_order) + "," +
           names[static_cast<std::size_t>(k.outer)] + ")_" + std::to_string(k.outer_order);
  }
  return out;
}

FormalCombination gordan_expansion(const std::array<int, 3>& slot_degrees,
                                   const std::array<int, 3>& roles,
                                   const std::array<int, 3>& exponents) {
  FormalCombination out(slot_degrees);
  for (int r : roles) check_slot(r);
  const int m = slot_degrees[static_cast<std::size_t>(roles[0])];
  const int n = slot_degrees[static_cast<std::size_t>(roles[1])];
  const int p = slot_degrees[static_cast<std::size_t>(roles[2])];
  const auto [a1, a2, a3] = exponents;
  if (a1 < 0 || a2 < 0 || a3 < 0) throw ArgumentError("Gordan exponents must be non-negative");
  const int f = roles[0];
  const int g = roles[1];
  const int h = roles[2];

  auto weight = [](int top1, int k1, int denom_top, int i) {
    const Rational denom = generalized_binomial(Rational(denom_top), i);
    if (denom == 0) {
      throw ArgumentError("vanishing denominator C(" + std::to_string(denom_top) + ", " +
                          std::to_string(i) + ") in Gordan bracket");
    }
    return Rational(Rational(binomial(top1, i) * binomial(k1, i)) / denom);
  };

  for (int i = 0; i <= a2 && (i == 0 || i <= n - a1 - a3); ++i) {
    const Rational w = i == 0 ? Rational(1) : weight(n - a1 - a3, a2, m + n - 2 * a3 - i + 1, i);
    out.add(w, f, g, h, a3 + i, a1 + a2 - i);
  }
  const Rational s = sign(a1 + 1);
  for (int i = 0; i <= a3 && (i == 0 || i <= p - a1 - a2); ++i) {
    const Rational w = i == 0 ? Rational(1) : weight(p - a1 - a2, a3, m + p - 2 * a2 - i + 1, i);
    out.add(s * w, f, h, g, a2 + i, a1 + a3 - i);
  }
  return out;
}

HomPoly gordan_bracket(const HomPoly& f, const HomPoly& g, const HomPoly& h,
                       const std::array<int, 3>& exponents) {
  return gordan_expansion({f.degree(), g.degree(), h.degree()}, {0, 1, 2}, exponents)
      .evaluate({f, g, h});
}

FormalCombination gordan_star_formal(int degree, const std::array<int, 3>& exponents) {
  const std::array<int, 3> degs{degree, degree, degree};
  FormalCombination out(degs);
  for (const auto& roles : {std::array<int, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    out.add(gordan_expansion(degs, roles, exponents), 1);
  }
  for (const auto& roles : {std::array<int, 3>{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}) {
    out.add(gordan_expansion(degs, roles, exponents), -1);
  }
  return out;
}

HomPoly gordan_star(const HomPoly& f, const HomPoly& g, const HomPoly& h,
                    const std::array<int, 3>& exponents) {
  if (f.degree() != g.degree() || g.degree() != h.degree()) {
    throw ArgumentError("starred bracket needs three arguments of equal degree");
  }
  return gordan_star_formal(f.degree(), exponents).evaluate({f, g, h});
}

namespace {

std::array<int, 3> mixed_degrees(int n) {
  if (n < 1) throw ArgumentError("mixed brackets need n >= 1");
  return {n, n, 2 * n - 2};
}

}  // namespace

FormalCombination gordan_mixed_formal(int n, MixedShape shape, const std::array<int, 3>& columns,
                                      const std::array<int, 3>& exponents) {
  const auto pos = static_cast<std::size_t>(static_cast<int>(shape) - 1);
  if (columns[pos] != 2) {
    throw ArgumentError("mixed bracket shape " + std::to_string(static_cast<int>(shape)) +
                        " needs the V_(2n-2) argument in that column");
  }
  return gordan_expansion(mixed_degrees(n), columns, exponents);
}

HomPoly gordan_mixed(const HomPoly& a, const HomPoly& b, const HomPoly& c, MixedShape shape,
                     const std::array<int, 3>& exponents) {
  const std::array<const HomPoly*, 3> args{&a, &b, &c};
  const auto pos = static_cast<std::size_t>(static_cast<int>(shape) - 1);
  const HomPoly* h = args[pos];
  const HomPoly* fg[2];
  std::size_t idx = 0;
  for (std::size_t s = 0; s < 3; ++s) {
    if (s != pos) fg[idx++] = args[s];
  }
  const int n = fg[0]->degree();
  if (fg[1]->degree() != n || h->degree() != 2 * n - 2) {
    throw ArgumentError("mixed bracket shape " + std::to_string(static_cast<int>(shape)) +
                        " needs degrees n, n and 2n-2 in the matching columns");
  }
  return gordan_expansion({a.degree(), b.degree(), c.degree()}, {0, 1, 2}, exponents)
      .evaluate({a, b, c});
}

FormalCombination gordan_mixed_star_formal(int n, const std::array<int, 3>& exponents) {
  FormalCombination out(mixed_degrees(n));
  using S = MixedShape;
  out.add(gordan_mixed_formal(n, S::Third, {0, 1, 2}, exponents), 1);
  out.add(gordan_mixed_formal(n, S::Third, {1, 0, 2}, exponents), -1);
  out.add(gordan_mixed_formal(n, S::Second, {1, 2, 0}, exponents), 1);
  out.add(gordan_mixed_formal(n, S::First, {2, 1, 0}, exponents), -1);
  out.add(gordan_mixed_formal(n, S::First, {2, 0, 1}, exponents), 1);
  out.add(gordan_mixed_formal(n, S::Second, {0, 2, 1}, exponents), -1);
  return out;
}

HomPoly gordan_mixed_star(const HomPoly& f, const HomPoly& g, const HomPoly& h,
                          const std::array<int, 3>& exponents) {
  return gordan_mixed_star_formal(f.degree(), exponents).evaluate({f, g, h});
}

FormalCombination jacobi_formal_t3(const ChainTuple& tuple) {
  if (tuple.length() != 3) throw ArgumentError("jacobi_formal_t3 needs a tuple of length 3");
  const int d = tuple.n(1);
  FormalCombination out({d, d, d});
  for (const auto& [x, y, z] : {std::array<int, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    out.add_right_nested(1, x, y, z, tuple.n(2), tuple.n(3));
  }
  return out;
}

FormalCombination jacobi_formal_t4(const ChainTuple& tuple, const Rational& alpha) {
  if (tuple.length() != 4) throw ArgumentError("jacobi_formal_t4 needs a tuple of length 4");
  const auto lay = layout(tuple);
  FormalCombination out({lay.degree(1), lay.degree(1), lay.degree(2)});
  out.add_right_nested(1, 0, 1, 2, tuple.n(3), tuple.n(4));
  out.add_right_nested(-1, 1, 0, 2, tuple.n(3), tuple.n(4));
  if (alpha != 0) {
    out.add_right_nested(alpha, 2, 0, 1, tuple.n(2), tuple.n(3) + tuple.n(4) - tuple.n(2));
  }
  return out;
}

namespace {

FormalCombination bracket_sum(int n, std::initializer_list<std::pair<std::array<int, 3>, int>> parts,
                              const std::array<int, 3>& exponents) {
  FormalCombination out({n, n, n});
  for (const auto& [roles, s] : parts) out.add(gordan_expansion({n, n, n}, roles, exponents), s);
  return out;
}

ChainTuple tup(std::vector<int> v) { return ChainTuple{std::move(v)}; }

}  // namespace

std::vector<ProofReplay> proof_replays(int n_max) {
  std::vector<ProofReplay> out;
  const std::array<int, 3> fgh{0, 1, 2};
  const std::array<int, 3> gfh{1, 0, 2};
  const std::array<int, 3> hgf{2, 1, 0};

  auto push3 = [&](std::string family, int param, ChainTuple t, FormalCombination g) {
    auto j = jacobi_formal_t3(t);
    out.push_back({std::move(family), param, std::move(t), std::move(g), std::move(j)});
  };
  auto push4 = [&](std::string family, int param, ChainTuple t, FormalCombination g,
                   const Rational& alpha) {
    auto j = jacobi_formal_t4(t, alpha);
    out.push_back({std::move(family), param, std::move(t), std::move(g), std::move(j)});
  };

  // Five ideals, first table.
  for (int n = 1; n <= n_max; ++n) {
    push3("(n,1,0)", n, tup({n, 1, 0}), bracket_sum(n, {{fgh, 1}, {hgf, -1}}, {0, 0, 1}));
  }
  for (int n = 2; n <= n_max; ++n) {
    push3("(n,1,1)", n, tup({n, 1, 1}),
          bracket_sum(n, {{fgh, 1}, {gfh, 1}, {hgf, 1}}, {0, 1, 1}));
  }
  for (int n = 3; n <= n_max; ++n) {
    FormalCombination g({n, n, n});
    if (n == 3) {
      g = gordan_star_formal(3, {1, 1, 2});
    } else {
      g = gordan_star_formal(n, {0, 1, 3});
      g.add(bracket_sum(n, {{fgh, 1}, {gfh, -1}, {hgf, -1}}, {0, 2, 2}),
            -make_rational(7 * n - 9, 4 * n - 6));
    }
    push3("(n,1,3)", n, tup({n, 1, 3}), std::move(g));
  }
  for (int n = 4; n <= n_max; ++n) {
    push3("(n,3,1)", n, tup({n, 3, 1}),
          bracket_sum(n, {{fgh, 1}, {gfh, 1}, {hgf, 1}}, {0, 2, 2}));
  }

  // Five ideals, modular families.
  for (int n = 2; n <= n_max; ++n) {
    auto g = gordan_star_formal(4 * n, {2 * n - 2, 2 * n + 2, 2 * n - 2});
    g.add(gordan_star_formal(4 * n, {2 * n - 2, 2 * n + 1, 2 * n - 1}), -2);
    push3("(4n,2n+1,4n-3)", n, tup({4 * n, 2 * n + 1, 4 * n - 3}), std::move(g));
  }
  for (int n = 0; n <= n_max; ++n) {
    push3("(4n+1,2n+1,4n)", n, tup({4 * n + 1, 2 * n + 1, 4 * n}),
          gordan_star_formal(4 * n + 1, {2 * n, 2 * n + 1, 2 * n}));
  }
  for (int n = 0; n <= n_max; ++n) {
    push3("(4n+2,2n+1,4n+1)", n, tup({4 * n + 2, 2 * n + 1, 4 * n + 1}),
          gordan_star_formal(4 * n + 2, {2 * n, 2 * n + 1, 2 * n + 1}));
  }
  for (int n = 1; n <= n_max; ++n) {
    auto g = gordan_star_formal(4 * n + 3, {2 * n - 1, 2 * n, 2 * n + 3});
    g.add(gordan_star_formal(4 * n + 3, {2 * n - 1, 2 * n + 3, 2 * n}), make_rational(4 * n + 3, 2 * n));
    push3("(4n+3,2n+1,4n+3)", n, tup({4 * n + 3, 2 * n + 1, 4 * n + 3}), std::move(g));
  }
  for (int n = 1; n <= n_max; ++n) {
    const int d = 4 * n + 4;
    const auto a = gordan_star_formal(d, {2 * n - 2, 2 * n + 4, 2 * n});
    const auto b = gordan_star_formal(d, {2 * n - 2, 2 * n, 2 * n + 4});
    const auto c = gordan_star_formal(d, {2 * n - 2, 2 * n + 3, 2 * n + 1});
    const Rational k = make_rational(3L * (n + 2) * (2 * n + 3) * (7 * n + 10),
                                     4L * n * (4 * n + 1) * (6 * n + 7));
    FormalCombination g = a;
    g.add(b, -1);
    g.add(a, -k);
    g.add(c, k * make_rational(5 * (n + 2), 7 * n + 10));
    push3("(4n+4,2n+1,4n+3)", n, tup({d, 2 * n + 1, 4 * n + 3}), std::move(g));
  }

  // Six ideals: the two-in-m_1, one-in-m_2 identity.
  using S = MixedShape;
  for (int n = 1; n <= n_max; ++n) {
    push4("(n,1,0,0)", n, tup({n, 1, 0, 0}), gordan_mixed_formal(n, S::Third, fgh, {0, 0, 0}), 0);
  }
  auto g_combo = [&](int n) {
    FormalCombination g({n, n, 2 * n - 2});
    g.add(gordan_mixed_formal(n, S::First, {2, 0, 1}, {0, 1, 1}), make_rational(2 * n - 3, n - 1));
    g.add(gordan_mixed_formal(n, S::Second, {1, 2, 0}, {0, 1, 1}), 1);
    g.add(gordan_mixed_formal(n, S::Third, {0, 1, 2}, {0, 1, 1}), 1);
    return g;
  };
  for (int n = 2; n <= n_max; ++n) {
    push4("(n,1,1,1)", n, tup({n, 1, 1, 1}), g_combo(n), make_rational(2 * n - 2, 3 * n - 4));
  }
  for (int n = 2; n <= n_max; ++n) {
    const std::array<int, 3> e{0, 2, 0};
    FormalCombination g({n, n, 2 * n - 2});
    g.add(gordan_mixed_formal(n, S::First, {2, 0, 1}, e), 1);
    g.add(gordan_mixed_formal(n, S::Second, {0, 2, 1}, e), 1);
    g.add(gordan_mixed_formal(n, S::First, {2, 1, 0}, e), -1);
    g.add(gordan_mixed_formal(n, S::Second, {1, 2, 0}, e), -1);
    const Rational k = make_rational(14 * n - 18, 9 * n - 12);
    g.add(gordan_mixed_formal(n, S::Third, {0, 1, 2}, e), k);
    g.add(gordan_mixed_formal(n, S::Third, {1, 0, 2}, e), -k);
    g.add(g_combo(n), make_rational((n - 1) * (2 * n - 4), (3 * n - 4) * (3 * n - 2)));
    push4("(n,1,0,2)", n, tup({n, 1, 0, 2}), std::move(g),
          make_rational(4 * (4 * n - 3), 3 * (3 * n - 2)));
  }
  return out;
}

}  // namespace sl2chain
