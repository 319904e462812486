// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "families.hpp"
#include "sl2chain/algebra.hpp"
#include "sl2chain/oracle.hpp"
#include "sl2chain/sampling.hpp"
#include "sl2chain/transvection.hpp"

using namespace sl2chain;
namespace fam = sl2chain::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ChainTuple tuple_of(const nlohmann::json& j) { return ChainTuple{j.get<std::vector<int>>()}; }

// 1. Three-module search to n1 = 32 against the tabulated families.
Outcome five_chains() {
  Outcome o;
  const auto r = cli({"search", "--length", "5", "--max-n1", "32", "--format", "json"});
  if (r.code != 0) {
    o.fail("search exited " + std::to_string(r.code));
    return o;
  }
  std::set<ChainTuple> got;
  for (const auto& v : nlohmann::json::parse(r.out)) got.insert(tuple_of(v["tuple"]));
  const auto want = fam::five_chain_families(32);
  for (const auto& t : want)
    if (!got.count(t)) o.fail("missing " + to_string(t));
  for (const auto& t : got)
    if (!want.count(t)) o.fail("unexpected " + to_string(t));
  o.detail = std::to_string(got.size()) + " tuples, expected " + std::to_string(want.size()) +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 2. Closed-form ratios of the infinite four-module families through `verify`.
Outcome family_ratios() {
  Outcome o;
  int checked = 0;
  for (long n = 1; n <= 12; ++n) {
    const std::string ns = std::to_string(n);
    std::vector<std::pair<std::vector<std::string>, std::string>> cases{{{"verify", ns, "1", "0", "0"}, "0"}};
    if (n >= 2) {
      cases.push_back({{"verify", ns, "1", "0", "2"}, to_string(make_rational(4 * (4 * n - 3), 3 * (3 * n - 2)))});
      cases.push_back({{"verify", ns, "1", "1", "1"}, to_string(make_rational(2 * n - 2, 3 * n - 4))});
    }
    for (const auto& [args, expected] : cases) {
      ++checked;
      const auto r = cli(args);
      std::string label;
      for (std::size_t i = 1; i < args.size(); ++i) label += args[i] + (i + 1 < args.size() ? " " : "");
      if (r.code != 0) {
        o.fail("(" + label + ") exited " + std::to_string(r.code));
        continue;
      }
      const auto doc = nlohmann::json::parse(r.out);
      const std::string got = doc["alpha_ratio"].is_string() ? doc["alpha_ratio"].get<std::string>() : "null";
      if (got != expected) o.fail("(" + label + ") alpha " + got + ", expected " + expected);
    }
  }
  o.detail = std::to_string(checked) + " tuples" + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 3. Four-module search to n1 = 12: families plus the seven sporadic tuples.
Outcome six_chains() {
  Outcome o;
  const auto r = cli({"search", "--length", "6", "--max-n1", "12", "--format", "json"});
  if (r.code != 0) {
    o.fail("search exited " + std::to_string(r.code));
    return o;
  }
  std::map<ChainTuple, std::string> got;
  for (const auto& v : nlohmann::json::parse(r.out)) {
    got[tuple_of(v["tuple"])] = v["alpha_ratio"].is_string() ? v["alpha_ratio"].get<std::string>() : "null";
  }
  const auto want = fam::six_chain_families(12);
  for (const auto& [t, a] : want) {
    const auto it = got.find(t);
    if (it == got.end()) {
      o.fail("missing " + to_string(t));
    } else if (it->second != to_string(a)) {
      o.fail(to_string(t) + " alpha " + it->second + ", expected " + to_string(a));
    }
  }
  for (const auto& [t, a] : got)
    if (!want.count(t)) o.fail("unexpected " + to_string(t));
  o.detail = std::to_string(got.size()) + " tuples, expected " + std::to_string(want.size()) +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 4. Listed non-chains are rejected; the (n,1,2) Jacobiator in closed form.
Outcome counterexamples() {
  Outcome o;
  const auto rejected = fam::rejected_triples(10);
  for (const auto& t : rejected) {
    const auto v = check_chain_t3(t);
    if (v.valid) o.fail(to_string(t) + " accepted");
    if (v.stage == VerdictStage::JacobiFailure && (!v.witness || v.witness->residual.is_zero())) {
      o.fail(to_string(t) + " rejected without a nonzero witness");
    }
  }
  for (long n = 3; n <= 8; ++n) {
    const int d = static_cast<int>(n);
    const ChainTuple t{{d, 1, 2}};
    const auto lay = layout(t);
    const auto r = jacobi_residual(lay, unit_required_alphas(lay), monomial(d, 0), 1, monomial(d, 1), 1,
                                   monomial(d, 2), 1);
    GradedElement expected;
    expected.add(3, monomial(3 * d - 6, 0) * make_rational(9 * n - 12, n * n * (2 * n - 3) * (n - 1)));
    if (!(r == expected)) o.fail("(n,1,2) residual differs at n=" + std::to_string(n));
  }
  o.detail = std::to_string(rejected.size()) + " rejected tuples, 6 residuals" + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 5. Whole-algebra verification and single-scalar tampering.
Outcome whole_algebras() {
  Outcome o;
  const std::vector<ChainTuple> reps{{{2, 1, 0}},    {{4, 1, 1}},    {{4, 1, 3}},    {{4, 3, 1}},
                                     {{8, 5, 5}},    {{3, 1, 1, 3}}, {{3, 1, 3, 1}}, {{4, 1, 3, 3}},
                                     {{4, 1, 1, 1}}, {{2, 1, 0, 2}}};
  int flips = 0;
  int kept = 0;
  for (const auto& t : reps) {
    const std::string name = to_string(t);
    const auto v = t.length() == 3 ? check_chain_t3(t) : check_chain_t4(t);
    if (!v.valid) {
      o.fail(name + " rejected by its checker");
      continue;
    }
    const auto alg = ChainAlgebra::build(t, v.alphas);
    if (!verify(alg).jacobi_ok) o.fail(name + " fails Jacobi");
    try {
      const auto s = lower_central_series(alg);
      std::vector<int> expected;
      for (int k = 1; k <= alg.layout().t(); ++k) {
        int d = 0;
        for (int j = k; j <= alg.layout().t(); ++j) d += alg.layout().dim(j);
        expected.push_back(d);
      }
      expected.push_back(0);
      if (s.dims != expected) o.fail(name + " lower central series off");
    } catch (const StructuralInconsistency& e) {
      o.fail(name + ": " + e.what());
    }
    // Tamper every scalar whose transvection exists. A change that leaves the
    // constraints satisfied is a rescaling and must still verify; anything
    // else must fail with a witness.
    int rep_flips = 0;
    for (const auto& slot : alpha_skeleton(alg.layout())) {
      if (!slot.order) continue;
      AlphaAssignment tampered = v.alphas;
      tampered[slot.index] = alpha_of(v.alphas, slot.index) + 1;
      const bool allowed = satisfies(*v.constraints, tampered);
      const auto rep = verify(ChainAlgebra::build(t, tampered, BuildMode::Unchecked));
      if (allowed) {
        ++kept;
        if (!rep.jacobi_ok) o.fail(name + ": rescaling alpha" + slot_key(slot.index) + " breaks Jacobi");
      } else {
        ++rep_flips;
        if (rep.jacobi_ok || rep.failing_triples.empty()) {
          o.fail(name + ": tampered alpha" + slot_key(slot.index) + " still verifies");
        }
      }
    }
    if (rep_flips == 0) o.fail(name + " has no pinned scalar to tamper");
    flips += rep_flips;
  }
  o.detail = std::to_string(reps.size()) + " algebras, " + std::to_string(flips) + " tampers failed as required, " +
             std::to_string(kept) + " rescalings kept" + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 6. Gordan vanishing to degree 8 and the proof replays to n = 6.
Outcome gordan() {
  Outcome o;
  const auto g = gordan_vanishing_suite(8, 20);
  const auto p = proof_replay_suite(6);
  if (!g.passed) o.fail("vanishing: " + (g.failures.empty() ? std::string("?") : g.failures.front()));
  if (!p.passed) o.fail("replay: " + (p.failures.empty() ? std::string("?") : p.failures.front()));
  o.detail = std::to_string(g.cases) + " bracket evaluations, " + std::to_string(p.cases) + " replay evaluations" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 7. General checker against the specialized ones.
Outcome equivalence() {
  Outcome o;
  const auto a = equivalence_suite(3, 8);
  const auto b = equivalence_suite(4, 6);
  if (!a.passed) o.fail("t=3: " + (a.failures.empty() ? std::string("?") : a.failures.front()));
  if (!b.passed) o.fail("t=4: " + (b.failures.empty() ? std::string("?") : b.failures.front()));
  o.detail = std::to_string(a.cases) + " + " + std::to_string(b.cases) + " tuples" + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 8. Randomized transvection identities.
Outcome transvections() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> deg(0, 10);
  for (int c = 0; c < 500; ++c) {
    const int n = deg(rng);
    const int m = deg(rng);
    const int k = std::uniform_int_distribution<int>(0, std::min(n, m))(rng);
    const HomPoly f = random_hompoly(n, rng);
    const HomPoly f2 = random_hompoly(n, rng);
    const HomPoly g = random_hompoly(m, rng);
    const HomPoly g2 = random_hompoly(m, rng);
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const HomPoly fg = transvection(f, g, k);
    const std::string at = " at case " + std::to_string(c);
    for (auto s : {Sl2Generator::E, Sl2Generator::F, Sl2Generator::H}) {
      if (!(act(s, fg) == transvection(act(s, f), g, k) + transvection(f, act(s, g), k))) {
        o.fail("invariance under " + to_string(s) + at);
      }
    }
    if (!(transvection(g, f, k) == fg * make_rational(k % 2 == 0 ? 1 : -1))) o.fail("symmetry" + at);
    if (!(transvection(f * a + f2 * b, g, k) == fg * a + transvection(f2, g, k) * b)) o.fail("left linearity" + at);
    if (!(transvection(f, g * a + g2 * b, k) == fg * a + transvection(f, g2, k) * b)) o.fail("right linearity" + at);
    // The closed-form monomial table must give the same polynomial.
    const TransvectionTable table(n, m, k);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n + m - 2 * k + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j) {
        const int s = i + j - k;
        if (s >= 0 && s <= n + m - 2 * k) coeffs[static_cast<std::size_t>(s)] += f.coeff(i) * g.coeff(j) * table.at(i, j);
      }
    if (!(HomPoly(n + m - 2 * k, coeffs) == fg)) o.fail("monomial table disagrees" + at);
  }
  o.detail = "500 cases" + (o.pass ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 five-ideal chains to n1=32", five_chains},
      {"2 closed-form six-ideal ratios", family_ratios},
      {"3 six-ideal chains to n1=12", six_chains},
      {"4 counterexamples", counterexamples},
      {"5 whole-algebra verification", whole_algebras},
      {"6 Gordan oracle", gordan},
      {"7 checker equivalence", equivalence},
      {"8 transvection identities", transvections},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
