#pragma once

#include <string>

#include "orbitcc/scenario.hpp"
#include "orbitcc/scenario_io.hpp"

namespace testutil {

inline std::string repo_path(const std::string& rel) {
  return std::string(ORBITCC_REPO_DIR) + "/" + rel;
}

inline std::string data_path(const std::string& rel) {
  return repo_path("data/" + rel);
}

inline orbitcc::GeometricScenario load_valid(const std::string& rel) {
  auto s = orbitcc::load_scenario(data_path(rel));
  auto report = orbitcc::validate(s);
  if (!report.ok())
    throw std::runtime_error(rel + " failed validation:\n" + report.to_string());
  return s;
}

inline const std::vector<std::string>& regular_corpus() {
  static const std::vector<std::string> files = {
      "scenarios/a1t.json", "scenarios/a1n.json", "scenarios/a1xa1.json",
      "scenarios/a2.json", "scenarios/b2.json"};
  return files;
}

inline const std::vector<std::string>& full_corpus() {
  static const std::vector<std::string> files = {
      "scenarios/a1t.json",      "scenarios/a1n.json",
      "scenarios/a1xa1.json",    "scenarios/a2.json",
      "scenarios/b2.json",       "scenarios/a1_point.json",
      "scenarios/a1xa1_wall.json"};
  return files;
}

}  // namespace testutil
