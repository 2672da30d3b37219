#pragma once

#include <json.hpp>

#include "bcstar/enumerate.hpp"
#include "bcstar/hecke.hpp"
#include "bcstar/path_family.hpp"

namespace bcstar {

/// [{"w": "1 -2", "coeffs": [1, 1]}, ...] in canonical term order.
nlohmann::json hecke_to_json(const HeckeElement& h);

/// Inverse of hecke_to_json; throws ParseError on malformed input.
HeckeElement hecke_from_json(const nlohmann::json& j, int n);

/// [{"type": "...", "defects": d, "count": c}, ...] sorted by type length,
/// then window, then defects.
nlohmann::json counts_to_json(const FamilyCounts& counts);

/// {"type", "rows" (long level rows), "defects" ([[i, j, k], ...])}.
nlohmann::json family_trace(const PathFamily& f);

} // namespace bcstar
