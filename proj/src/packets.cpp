#include "orbitcc/packets.hpp"

#include "orbitcc/errors.hpp"
#include "orbitcc/kgroup.hpp"

namespace orbitcc {

std::set<std::string> l_packet(const GeometricScenario& s, const std::string& orbit_id) {
  s.orbit_idx(orbit_id);  // id check
  std::set<std::string> out;
  for (const auto& p : s.parameters)
    if (p.orbit == orbit_id) out.insert(p.id);
  return out;
}

std::set<std::string> micro_packet(const GeometricScenario& s, const CCTable& t,
                                   const std::string& orbit_id) {
  s.orbit_idx(orbit_id);
  if (t.status != SolveStatus::Unique)
    throw StateError("micro packet requires a unique table (" + to_string(t.status) +
                     (t.description.empty() ? "" : ": " + t.description) + ")");
  std::set<std::string> out;
  for (const auto& p : s.parameters)
    if (t.entries.at(p.id).coeff(orbit_id) != 0) out.insert(p.id);
  return out;
}

std::set<std::string> micro_packet_for_form(const GeometricScenario& s,
                                            const CCTable& t,
                                            const std::string& orbit_id,
                                            const std::string& delta) {
  auto packet = micro_packet(s, t, orbit_id);
  std::set<std::string> out;
  for (const auto& id : packet) {
    const auto& p = s.parameters[s.param_idx(id)];
    if (!p.pure_form)
      throw StateError("parameter " + id + " carries no pure_form label");
    if (*p.pure_form == delta) out.insert(id);
  }
  return out;
}

GenericMembershipReport verify_generic_membership(const GeometricScenario& s,
                                                  const CCTable& t) {
  GenericMembershipReport rep;
  std::set<std::string> generic;
  for (const auto& p : s.parameters)
    if (is_generic(s, p.id)) generic.insert(p.id);

  const std::string open_id = s.orbits[s.open_orbit()].id;
  for (const auto& o : s.orbits) {
    auto packet = micro_packet(s, t, o.id);
    bool has_generic = false;
    for (const auto& id : packet)
      if (generic.count(id)) has_generic = true;
    if (has_generic != (o.id == open_id))
      rep.violations.push_back(
          "orbit " + o.id + ": generic member " +
          (has_generic ? "present off the open orbit" : "missing on the open orbit"));
  }
  if (micro_packet(s, t, open_id) != l_packet(s, open_id))
    rep.violations.push_back("orbit " + open_id +
                             ": micro packet differs from the L-packet");
  return rep;
}

ShahidiVerdict shahidi_check(const GeometricScenario& s, const CCTable& t,
                             const AParameterInstance& a) {
  int orbit = s.orbit_idx(a.orbit);
  int codim = s.dim_X - s.orbits[orbit].dim;
  if (a.conormal_fiber_dim != codim)
    throw IntegrityError("instance " + a.id + ": conormal_fiber_dim " +
                         std::to_string(a.conormal_fiber_dim) + " != codim " +
                         std::to_string(codim));
  if (a.conormal_fiber_dim == 0 && !a.e_is_zero)
    throw IntegrityError("instance " + a.id +
                         ": nonzero SL2 direction inside a zero conormal fiber");

  bool open = orbit == s.open_orbit();
  ShahidiVerdict v;
  bool geometric = open == a.e_is_zero;

  bool has_generic = false;
  for (const auto& id : micro_packet(s, t, a.orbit))
    if (is_generic(s, id)) has_generic = true;
  bool packet_side = has_generic == a.e_is_zero;

  v.pass = geometric && packet_side;
  v.explanation = "orbit " + a.orbit + (open ? " is open" : " is not open") +
                  ", SL2 direction " + (a.e_is_zero ? "vanishes" : "is nonzero") +
                  ", micro packet " + (has_generic ? "has" : "has no") +
                  " generic member";
  return v;
}

std::vector<std::pair<std::string, ShahidiVerdict>> shahidi_check_all(
    const GeometricScenario& s, const CCTable& t) {
  std::map<std::string, bool> per_orbit;
  for (const auto& a : s.a_parameters) {
    auto it = per_orbit.find(a.orbit);
    if (it != per_orbit.end() && it->second != a.e_is_zero)
      throw IntegrityError("instances on orbit " + a.orbit +
                           " disagree on e_is_zero");
    per_orbit[a.orbit] = a.e_is_zero;
  }
  std::vector<std::pair<std::string, ShahidiVerdict>> out;
  for (const auto& a : s.a_parameters)
    out.push_back({a.id, shahidi_check(s, t, a)});
  return out;
}

}  // namespace orbitcc
