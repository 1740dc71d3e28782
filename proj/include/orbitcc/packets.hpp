#pragma once

#include <set>
#include <string>
#include <vector>

#include "orbitcc/ccsolver.hpp"
#include "orbitcc/scenario.hpp"

namespace orbitcc {

/// Parameters supported on the given orbit.
std::set<std::string> l_packet(const GeometricScenario& s, const std::string& orbit_id);

/// Parameters whose cycle meets the orbit: {xi : chi_S^mic(xi) != 0}.
/// Requires a Unique table; an Ambiguous one raises StateError naming the
/// undetermined parameters.
std::set<std::string> micro_packet(const GeometricScenario& s, const CCTable& t,
                                   const std::string& orbit_id);

/// The micro packet filtered to one pure form; every member of the
/// unfiltered packet must carry a pure_form label.
std::set<std::string> micro_packet_for_form(const GeometricScenario& s,
                                            const CCTable& t,
                                            const std::string& orbit_id,
                                            const std::string& delta);

struct GenericMembershipReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that generic parameters appear in a micro packet exactly for the
/// open orbit, and that the open orbit's micro packet equals its L-packet.
GenericMembershipReport verify_generic_membership(const GeometricScenario& s,
                                                  const CCTable& t);

struct ShahidiVerdict {
  bool pass = false;
  std::string explanation;
};

/// Desk check of the open-orbit criterion on one A-parameter instance:
/// the orbit is open iff the SL2 direction vanishes, cross-checked against
/// generic membership in the instance's micro packet. An instance with a
/// zero conormal fiber but nonzero SL2 direction is rejected outright.
ShahidiVerdict shahidi_check(const GeometricScenario& s, const CCTable& t,
                             const AParameterInstance& a);

/// Runs shahidi_check over the scenario's instances and additionally
/// requires instances on a common orbit to agree on e_is_zero.
std::vector<std::pair<std::string, ShahidiVerdict>> shahidi_check_all(
    const GeometricScenario& s, const CCTable& t);

}  // namespace orbitcc
