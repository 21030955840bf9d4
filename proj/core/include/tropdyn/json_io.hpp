#pragma once

// JSON encodings. Tropical infinities are written as the strings "-inf"
// and "+inf"; finite values as numbers.
//
// System schema:
//   { "n": 3, "arcs": [[source, target, weight], ...], "labels": [...] }
// Also accepted on input:
//   { "transition_matrix": [[0/1, ...], ...], "edge_potential": [[...], ...] }
//   { "image": [T(0), T(1), ...], "potential": [A(0), A(1), ...] }

#include <nlohmann/json.hpp>

#include "tropdyn/dynamics.hpp"
#include "tropdyn/ergodic.hpp"
#include "tropdyn/maxplus.hpp"
#include "tropdyn/measures.hpp"
#include "tropdyn/thermo.hpp"
#include "tropdyn/tropical.hpp"
#include "tropdyn/zerotemp.hpp"

namespace tropdyn {

void to_json(nlohmann::json& j, const TropValue& v);
void from_json(const nlohmann::json& j, TropValue& v);

nlohmann::json density_to_json(const Density& b);
Density density_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const nlohmann::json& j);

/// Throws InvalidInput on any schema or invariant violation.
TransitionSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const TransitionSystem& sys);

nlohmann::json report_to_json(const ErgodicReport& report);
ErgodicReport report_from_json(const nlohmann::json& j);

nlohmann::json spectral_to_json(const SpectralData& data);
nlohmann::json rate_to_json(const RateFunction& rate);

}  // namespace tropdyn
