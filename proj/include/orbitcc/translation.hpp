#pragma once

#include <map>
#include <set>
#include <string>

#include "orbitcc/ccsolver.hpp"
#include "orbitcc/scenario.hpp"

namespace orbitcc {

/// Pair of infinitesimal characters on a shared root datum, linking a
/// singular scenario to a regular one.
struct TranslationDatum {
  InfinitesimalCharacter chi_singular;
  InfinitesimalCharacter chi_regular;
  bool lattice_check = false;     // lambda - lambda' in the cocharacter lattice
  bool positivity_check = false;  // positive integral pairings stay positive
};

/// Computes both checks. Throws InputError when lambda_regular is singular
/// in the classical sense (some root pairs to zero); a merely non-dominant
/// regular target fails the positivity check instead.
TranslationDatum analyze_datum(const RootDatum& d, RatVec lambda_singular,
                               RatVec lambda_regular);

bool validate_datum(const TranslationDatum& datum);

struct OrbitPreimage {
  std::vector<std::string> members;  // regular orbits over this singular orbit
  std::string open_member;
};

struct TranslationPairing {
  std::string singular_scenario;
  std::string regular_scenario;
  RatVec lambda_singular;
  RatVec lambda_regular;
  std::map<std::string, OrbitPreimage> orbit_preimages;
  std::map<std::string, std::string> parameter_map;  // singular -> regular
  int fiber_dim = 0;
};

TranslationPairing load_pairing(const std::string& path);
std::string pairing_to_json_text(const TranslationPairing& p);
void save_pairing(const TranslationPairing& p, const std::string& path);

/// Checks the pairing against both scenarios: preimages partition the
/// regular orbit set, designated members are the unique top-dimensional
/// ones of dimension dim(S) + d, the parameter map is injective and lands
/// on designated members, and the datum passes its checks.
ValidationReport validate_pairing(const TranslationPairing& p,
                                  const GeometricScenario& sing,
                                  const GeometricScenario& reg);

/// Designated open member of the preimage of a singular orbit.
std::string pull_orbit(const TranslationPairing& p, const std::string& singular_orbit);

/// Singular table read off the regular one: chi_S(xi) = chi_{f*S}(f*xi).
CCTable transport_cc(const TranslationPairing& p, const GeometricScenario& sing,
                     const GeometricScenario& reg, const CCTable& regular_table);

/// Singular genericity flags transported through the parameter map.
std::map<std::string, bool> transport_genericity(
    const TranslationPairing& p, const GeometricScenario& sing,
    const std::map<std::string, bool>& regular_flags);

/// Singular parameters whose translate lies in the given regular packet.
std::set<std::string> transport_packet(const TranslationPairing& p,
                                       const GeometricScenario& sing,
                                       const std::set<std::string>& regular_packet);

}  // namespace orbitcc
