#include "sl2chain/serialize.hpp"

namespace sl2chain {

using nlohmann::json;

json to_json(const HomPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"degree", p.degree()}, {"coeffs", coeffs}};
}

HomPoly hompoly_from_json(const json& doc) {
  try {
    const int degree = doc.at("degree").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : doc.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return HomPoly(degree, std::move(coeffs));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed polynomial document: ") + e.what());
  }
}

json to_json(const GradedElement& g) {
  json out = json::object();
  for (const auto& [i, p] : g.components) {
    if (!p.is_zero()) out[std::to_string(i)] = to_json(p);
  }
  return out;
}

json to_json(const AlphaAssignment& alphas) {
  json out = json::object();
  for (const auto& [slot, value] : alphas) {
    if (value != 0) out[slot_key(slot)] = to_string(value);
  }
  return out;
}

std::string to_string(VerdictStage stage) {
  switch (stage) {
    case VerdictStage::Valid: return "valid";
    case VerdictStage::Inadmissible: return "inadmissible";
    case VerdictStage::JacobiFailure: return "jacobi_failure";
  }
  return "?";
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyTuple: return "empty_tuple";
    case ViolationKind::NegativeEntry: return "negative_entry";
    case ViolationKind::N2Even: return "n2_even";
    case ViolationKind::N2OutOfRange: return "n2_out_of_range";
    case ViolationKind::EntryAboveBound: return "entry_above_bound";
  }
  return "?";
}

std::optional<std::string> alpha_ratio(const ChainVerdict& v) {
  if (!v.valid || !v.constraints || v.tuple.length() != 4) return std::nullopt;
  const SlotIndex s224{2, 2, 4};
  for (const auto& r : v.constraints->ratios) {
    if (r.slot == s224) return to_string(r.value);
  }
  if (v.constraints->free.count(s224)) return "free";
  return "0";
}

json to_json(const ChainVerdict& v) {
  json doc;
  doc["tuple"] = v.tuple.entries;
  doc["valid"] = v.valid;
  doc["stage"] = to_string(v.stage);

  json modules = json::array();
  std::vector<ProductSlot> skeleton;
  if (v.layout) {
    for (int i = 1; i <= v.layout->t(); ++i) {
      modules.push_back({{"degree", v.layout->degree(i)}, {"dim", v.layout->dim(i)}});
    }
    if (v.stage != VerdictStage::Inadmissible) skeleton = alpha_skeleton(*v.layout);
  }
  doc["modules"] = modules;
  doc["alphas"] = to_json(v.alphas);

  json forced = json::array();
  std::set<SlotIndex> forced_set;
  for (const auto& s : skeleton) {
    if (s.status == SlotStatus::ForcedZero) {
      forced.push_back(slot_key(s.index));
      forced_set.insert(s.index);
    }
  }
  doc["forced_zero"] = forced;

  json jacobi_zero = json::array();
  json free = json::array();
  json relations = json::array();
  if (v.constraints) {
    for (const auto& s : v.constraints->zeros) {
      if (!forced_set.count(s)) jacobi_zero.push_back(slot_key(s));
    }
    for (const auto& s : v.constraints->free) free.push_back(slot_key(s));
    for (const auto& rel : v.constraints->relations) {
      json terms = json::array();
      for (const auto& t : rel.terms) {
        terms.push_back({{"slots", {slot_key(t.first), slot_key(t.second)}},
                         {"coefficient", to_string(t.coefficient)}});
      }
      relations.push_back(terms);
    }
  }
  doc["jacobi_zero"] = jacobi_zero;
  doc["free"] = free;
  doc["relations"] = relations;
  const auto ratio = alpha_ratio(v);
  doc["alpha_ratio"] = ratio ? json(*ratio) : json(nullptr);

  json violations = json::array();
  for (const auto& viol : v.violations) {
    violations.push_back(
        {{"kind", to_string(viol.kind)}, {"index", viol.index}, {"message", viol.message}});
  }
  doc["violations"] = violations;

  if (v.witness && v.layout) {
    const auto& w = *v.witness;
    json args = json::array();
    for (std::size_t s = 0; s < 3; ++s) {
      const HomPoly p = monomial(v.layout->degree(w.modules[s]), w.exponents[s]);
      args.push_back({{"module", w.modules[s]}, {"exponent", w.exponents[s]}, {"monomial", to_string(p)}});
    }
    json residual_text = json::object();
    for (const auto& [i, p] : w.residual.components) {
      if (!p.is_zero()) residual_text[std::to_string(i)] = to_string(p);
    }
    doc["witness"] = {{"arguments", args},
                      {"alphas", to_json(w.alphas)},
                      {"residual", to_json(w.residual)},
                      {"residual_text", residual_text}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

}  // namespace sl2chain
