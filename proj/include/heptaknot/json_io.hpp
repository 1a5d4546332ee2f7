#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "heptaknot/census.hpp"
#include "heptaknot/polygon.hpp"

namespace heptaknot {

using Json = nlohmann::json;

// Reads {"points": [[x, y, z], ...]}. Coordinates may be JSON integers,
// strings ("123", "-4.5", "7/3"), or JSON floats (converted to their
// exact binary value; use strings for exact decimals).
Polygon parse_points_json(const std::string& text);

// Coordinates rendered as canonical "p" / "p/q" strings, so emitted
// files re-parse to identical rationals.
Json points_to_json(std::span<const Point3> points);

// 64-bit FNV-1a over the canonical coordinate serialization, as a
// 16-digit hex string.
std::string fingerprint_hex(std::span<const Point3> points);

Json census_report_to_json(const CensusReport& report);

}  // namespace heptaknot
