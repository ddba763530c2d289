#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "eur/designs.hpp"
#include "eur/entropies.hpp"
#include "eur/game.hpp"
#include "eur/relations.hpp"
#include "eur/states.hpp"

namespace eur {

using nlohmann::json;

/// Decimal rendering with 12 significant digits, locale independent.
std::string format12(double x);
/// x rounded to 12 significant digits (so JSON emission prints <= 12 digits).
double round12(double x);

// MeasurementFamily:
//   {"d", "kind", "equality_constant", "setting_weights"?,
//    "settings": [[{"weight", "re": [...], "im": [...]}]]}
json family_to_json(const MeasurementFamily& family);
MeasurementFamily family_from_json(const json& j);

// Density matrix: {"dims": [...], "re": [[...]], "im": [[...]]}
json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

// Joint distribution: {"d_a", "d_b", "settings": [{"theta", "table": [[p(k,l)]]}]}
json joint_to_json(const JointDistribution& joint);
JointDistribution joint_from_json(const json& j);

json report_to_json(const RelationReport& r);
json game_to_json(const GameResult& g);

std::string reports_csv_header();
std::string report_csv_row(const RelationReport& r);

/// Reads and parses a JSON file; FormatError on I/O or parse failure.
json read_json_file(const std::string& path);

}  // namespace eur
