#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sl2chain/jacobi.hpp"

namespace sl2chain {

/// {"degree": d, "coeffs": ["num/den", ...]} with coefficient a on x^(d-a) y^a.
nlohmann::json to_json(const HomPoly& p);
HomPoly hompoly_from_json(const nlohmann::json& doc);

/// {"<module>": <HomPoly json>, ...} over the nonzero components.
nlohmann::json to_json(const GradedElement& g);

nlohmann::json to_json(const AlphaAssignment& alphas);

/// The ratio alpha224 alpha112 / (alpha123 alpha134) of a valid six-ideal
/// verdict: its value, "0" when alpha224 is forced to zero, "free" when
/// unconstrained. Empty for other verdicts.
std::optional<std::string> alpha_ratio(const ChainVerdict& verdict);

/// Verdict document:
/// {"tuple", "valid", "stage", "modules":[{"degree","dim"}], "alphas",
///  "forced_zero", "jacobi_zero", "free", "alpha_ratio", "relations",
///  "violations", "witness"}.
nlohmann::json to_json(const ChainVerdict& verdict);

std::string to_string(VerdictStage stage);
std::string to_string(ViolationKind kind);

}  // namespace sl2chain
