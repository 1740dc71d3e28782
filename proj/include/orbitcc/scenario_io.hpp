#pragma once

#include <string>

#include "orbitcc/scenario.hpp"

namespace orbitcc {

/// Parses a scenario file. Throws ParseError on malformed input; referential
/// and mathematical problems are left for validate() to report.
GeometricScenario load_scenario(const std::string& path);

GeometricScenario scenario_from_json_text(const std::string& text,
                                          const std::string& origin = "<memory>");

/// Deterministic serialization; load(save(s)) reproduces s byte for byte.
std::string scenario_to_json_text(const GeometricScenario& s);

void save_scenario(const GeometricScenario& s, const std::string& path);

}  // namespace orbitcc
