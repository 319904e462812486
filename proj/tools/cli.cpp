#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sl2chain/algebra.hpp"
#include "sl2chain/oracle.hpp"
#include "sl2chain/serialize.hpp"

namespace sl2chain::cli {

namespace {

std::string module_list(const ModuleLayout& lay) {
  std::string out;
  for (int i = 1; i <= lay.t(); ++i) {
    if (i > 1) out += " ⊕ ";
    out += "V" + subscript(lay.degree(i));
  }
  return out;
}

std::string slot_list(const std::set<SlotIndex>& slots) {
  std::string out;
  for (const auto& s : slots) {
    if (!out.empty()) out += " ";
    out += "α" + subscript(s.i) + subscript(s.j) + subscript(s.k);
  }
  return out;
}

std::string render_search(const std::vector<ChainVerdict>& rows, int t, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& v : rows) doc.push_back(to_json(v));
    out << doc.dump(2) << "\n";
    return out.str();
  }
  const bool six = t == 4;
  if (format == "csv") {
    for (int i = 1; i <= t; ++i) out << "n" << i << ",";
    out << "degrees," << (six ? "alpha," : "") << "free\n";
    for (const auto& v : rows) {
      for (int e : v.tuple.entries) out << e << ",";
      for (int i = 1; i <= t; ++i) out << (i > 1 ? " " : "") << v.layout->degree(i);
      out << ",";
      if (six) out << alpha_ratio(v).value_or("") << ",";
      std::string free;
      for (const auto& s : v.constraints->free) free += (free.empty() ? "" : " ") + slot_key(s);
      out << free << "\n";
    }
    return out.str();
  }
  out << "|";
  for (int i = 1; i <= t; ++i) out << " n" << subscript(i) << " |";
  out << " modules |" << (six ? " α |" : "") << " free |\n|";
  for (int i = 1; i <= t + 2 + (six ? 1 : 0); ++i) out << "---|";
  out << "\n";
  for (const auto& v : rows) {
    out << "|";
    for (int e : v.tuple.entries) out << " " << e << " |";
    out << " " << module_list(*v.layout) << " |";
    if (six) out << " " << alpha_ratio(v).value_or("") << " |";
    out << " " << slot_list(v.constraints->free) << " |\n";
  }
  return out.str();
}

/// Writes to the file at `path`, or to `out` when the path is empty.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  file << text;
  return static_cast<bool>(file);
}

AlphaAssignment parse_alpha_overrides(const std::vector<std::string>& specs) {
  AlphaAssignment out;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw ArgumentError("alpha override '" + spec + "' is not key=value");
    out[parse_slot_key(spec.substr(0, eq))] = parse_rational(spec.substr(eq + 1));
  }
  return out;
}

/// Verdict for a tuple under optional overrides. Without overrides (t <= 4)
/// the specialized checker decides; otherwise the general checker runs on
/// the checker's normalization (t <= 4) or on the overrides alone (t >= 5).
ChainVerdict decide(const ChainTuple& tuple, const AlphaAssignment& overrides) {
  const int t = tuple.length();
  if (t <= 4) {
    ChainVerdict base = t == 3 ? check_chain_t3(tuple) : check_chain_t4(tuple);
    if (overrides.empty() || base.stage == VerdictStage::Inadmissible) return base;
    AlphaAssignment alphas = base.alphas;
    for (const auto& [k, v] : overrides) alphas[k] = v;
    return check_chain_general(tuple, alphas);
  }
  const auto report = step1_admissible(tuple);
  if (!report.admissible) return check_chain_general(tuple, {});
  for (const auto& s : alpha_skeleton(layout(tuple))) {
    if (s.status == SlotStatus::Required && !overrides.count(s.index)) {
      throw ArgumentError("tuples with more than four entries need --alpha for every required slot; alpha" +
                          slot_key(s.index) + " is missing");
    }
  }
  return check_chain_general(tuple, overrides);
}

int report_inadmissible(const ChainVerdict& v, std::ostream& out, std::ostream& err) {
  out << to_json(v).dump(2) << "\n";
  for (const auto& viol : v.violations) err << "inadmissible: " << viol.message << "\n";
  return kBadInput;
}

int cmd_search(int length, int max_n1, const std::string& format, unsigned workers,
               const std::string& output, std::ostream& out, std::ostream& err) {
  const int t = length - 2;
  const auto rows = search(t, max_n1, workers);
  return emit(render_search(rows, t, format), output, out, err) ? kOk : kBadInput;
}

int cmd_verify(const std::vector<int>& entries, const std::vector<std::string>& alpha_specs,
               std::ostream& out, std::ostream& err) {
  const ChainTuple tuple{entries};
  if (tuple.length() < 3) {
    err << "error: verify needs a tuple of at least three entries\n";
    return kBadInput;
  }
  const auto verdict = decide(tuple, parse_alpha_overrides(alpha_specs));
  if (verdict.stage == VerdictStage::Inadmissible) return report_inadmissible(verdict, out, err);
  out << to_json(verdict).dump(2) << "\n";
  if (!verdict.valid) {
    const auto& w = *verdict.witness;
    err << "Jacobi fails on";
    for (std::size_t s = 0; s < 3; ++s) {
      err << " " << to_string(monomial(verdict.layout->degree(w.modules[s]), w.exponents[s])) << " @ m"
          << w.modules[s];
    }
    err << "\n";
    for (const auto& [i, p] : w.residual.components) {
      if (!p.is_zero()) err << "  residual in m" << i << ": " << to_string(p) << "\n";
    }
    return kInvalid;
  }
  return kOk;
}

int cmd_export(const std::vector<int>& entries, const std::vector<std::string>& alpha_specs,
               const std::string& format, const std::string& output, std::ostream& out,
               std::ostream& err) {
  const ChainTuple tuple{entries};
  if (tuple.length() < 3) {
    err << "error: export needs a tuple of at least three entries\n";
    return kBadInput;
  }
  const auto verdict = decide(tuple, parse_alpha_overrides(alpha_specs));
  if (verdict.stage == VerdictStage::Inadmissible) {
    for (const auto& viol : verdict.violations) err << "inadmissible: " << viol.message << "\n";
    return kBadInput;
  }
  if (!verdict.valid) {
    err << "error: " << to_string(tuple) << " does not give a Lie algebra under these alphas; nothing written\n";
    return kInvalid;
  }
  const auto algebra = ChainAlgebra::build(tuple, verdict.alphas);
  const auto report = verify(algebra);
  if (!report.jacobi_ok || !report.antisymmetry_ok) {
    err << "error: assembled algebra fails verification; nothing written\n";
    return kInvalid;
  }
  const std::string text = format == "dot" ? to_dot(algebra) : to_json(algebra).dump(2) + "\n";
  return emit(text, output, out, err) ? kOk : kBadInput;
}

int print_result(const std::string& name, const OracleResult& r, std::ostream& out) {
  out << name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases << " cases)\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  return r.passed ? kOk : kInvalid;
}

int cmd_oracle(const std::string& suite, int max_degree, int samples, int max_n, int t, int max_n1,
               unsigned workers, std::ostream& out) {
  if (suite == "gordan") {
    const int a = print_result("gordan vanishing", gordan_vanishing_suite(max_degree, samples, 1, workers), out);
    const int b = print_result("proof replay", proof_replay_suite(max_n), out);
    return a == kOk && b == kOk ? kOk : kInvalid;
  }
  return print_result("equivalence t=" + std::to_string(t), equivalence_suite(t, max_n1, 3, workers), out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search, verify and export sl2-chained Lie algebras", "sl2chain"};
  app.require_subcommand(1);

  // search
  auto* search_cmd = app.add_subcommand("search", "List every valid tuple of the given chain length");
  int length = 0;
  int max_n1 = 32;
  std::string search_format = "table-md";
  unsigned workers = 0;
  std::string search_output;
  search_cmd->add_option("--length", length, "Number of ideals in the chain (5 or 6)")
      ->required()
      ->check(CLI::IsMember({5, 6}));
  search_cmd->add_option("--max-n1", max_n1, "Largest n1 to enumerate")->check(CLI::Range(1, 512));
  search_cmd->add_option("--format", search_format, "table-md, csv or json")
      ->check(CLI::IsMember({"table-md", "csv", "json"}));
  search_cmd->add_option("--workers", workers, "Worker threads (default: all cores)")
      ->check(CLI::Range(1u, 1024u));
  search_cmd->add_option("--output", search_output, "Write to this file instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check one tuple and print its verdict as JSON");
  std::vector<int> verify_tuple;
  std::vector<std::string> verify_alphas;
  verify_cmd->add_option("tuple", verify_tuple, "n1 n2 ... nt")->required();
  verify_cmd->add_option("--alpha", verify_alphas, "Override a structure scalar, e.g. 224=7/5")
      ->allow_extra_args(false);

  // export
  auto* export_cmd = app.add_subcommand("export", "Write the structure constants of a valid algebra");
  std::vector<int> export_tuple;
  std::vector<std::string> export_alphas;
  std::string export_format = "json";
  std::string export_output;
  export_cmd->add_option("tuple", export_tuple, "n1 n2 ... nt")->required();
  export_cmd->add_option("--alpha", export_alphas, "Override a structure scalar, e.g. 113=2")
      ->allow_extra_args(false);
  export_cmd->add_option("--format", export_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--output", export_output, "Write to this file instead of stdout");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an independent cross-check suite");
  std::string suite;
  int max_degree = 8;
  int samples = 20;
  int max_n = 6;
  int oracle_t = 3;
  int oracle_max_n1 = 0;
  unsigned oracle_workers = 0;
  oracle_cmd->add_option("suite", suite, "gordan or equivalence")
      ->required()
      ->check(CLI::IsMember({"gordan", "equivalence"}));
  oracle_cmd->add_option("--max-degree", max_degree, "Gordan: largest argument degree")->check(CLI::Range(0, 16));
  oracle_cmd->add_option("--samples", samples, "Gordan: random triples per bracket")->check(CLI::Range(1, 1000));
  oracle_cmd->add_option("--max-n", max_n, "Gordan: largest family parameter in the proof replay")
      ->check(CLI::Range(0, 12));
  oracle_cmd->add_option("--t", oracle_t, "Equivalence: tuple length (3 or 4)")->check(CLI::IsMember({3, 4}));
  oracle_cmd->add_option("--max-n1", oracle_max_n1, "Equivalence: largest n1 (default 8 for t=3, 6 for t=4)")
      ->check(CLI::Range(1, 64));
  oracle_cmd->add_option("--workers", oracle_workers, "Worker threads (default: all cores)")
      ->check(CLI::Range(1u, 1024u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (*search_cmd) return cmd_search(length, max_n1, search_format, workers, search_output, out, err);
    if (*verify_cmd) return cmd_verify(verify_tuple, verify_alphas, out, err);
    if (*export_cmd) return cmd_export(export_tuple, export_alphas, export_format, export_output, out, err);
    if (*oracle_cmd) {
      if (oracle_max_n1 == 0) oracle_max_n1 = oracle_t == 3 ? 8 : 6;
      return cmd_oracle(suite, max_degree, samples, max_n, oracle_t, oracle_max_n1, oracle_workers, out);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace sl2chain::cli
