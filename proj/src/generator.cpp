#include "orbitcc/errors.hpp"
#include "orbitcc/scenario.hpp"

namespace orbitcc {

// Rank-one model: the multiplicative group acting on the projective line,
// z -> t^2 z, with fixed points 0 and infinity. Everything below is read
// off that action:
//   - orbits are the fixed points plus the open complement; the normalizer
//     variant adds the swap z -> 1/z, fusing the two fixed points;
//   - the open-orbit isotropy component group is Z/2 in both variants, so
//     the open orbit carries the labels "triv" and "sgn";
//   - for the torus the generating loop of the open orbit lifts to the
//     nontrivial isotropy component, so "sgn" has monodromy -1 around each
//     fixed point; for the normalizer the loop lifts into the identity
//     component and both labels are monodromy-free;
//   - a closed point contributes 1 to the cycle of an open-orbit parameter
//     exactly when the parameter's local monodromy there is nontrivial;
//   - the reflection coefficient n(closed, open) counts the fixed points
//     lying on the closed orbit inside one fiber (one for the torus, two
//     for the normalizer);
//   - continuation columns: an open-orbit parameter is sent to minus itself
//     exactly when its cycle has no closed-point term; a closed-orbit
//     parameter picks up every open parameter whose monodromy at its point
//     is trivial.
GeneratedScenario generate_rank_one(RankOneKind kind) {
  GeneratedScenario out;
  GeometricScenario& s = out.scenario;
  s.datum = RootDatum::builtin("A1");
  s.lambda = {Rat(1)};
  s.dim_X = 1;

  struct OpenParam {
    std::string id;
    std::string label;
    std::map<std::string, bool> monodromy_nontrivial;  // closed orbit -> flag
  };
  std::vector<std::string> closed_orbits;
  std::vector<std::pair<std::string, std::string>> closed_params;  // (id, orbit)
  std::vector<OpenParam> open_params;
  std::map<std::string, int> fixed_points_on;  // closed orbit -> count in fiber

  if (kind == RankOneKind::Torus) {
    s.name = "a1t";
    closed_orbits = {"o0", "oInf"};
    closed_params = {{"xi0", "o0"}, {"xiInf", "oInf"}};
    open_params = {{"xiPlus", "triv", {{"o0", false}, {"oInf", false}}},
                   {"xiMinus", "sgn", {{"o0", true}, {"oInf", true}}}};
    fixed_points_on = {{"o0", 1}, {"oInf", 1}};
  } else {
    s.name = "a1n";
    closed_orbits = {"oClosed"};
    closed_params = {{"xiC", "oClosed"}};
    open_params = {{"xiPlus", "triv", {{"oClosed", false}}},
                   {"xiMinus", "sgn", {{"oClosed", false}}}};
    fixed_points_on = {{"oClosed", 2}};
  }

  for (const auto& id : closed_orbits) s.orbits.push_back({id, 0, {}, true});
  s.orbits.push_back({"oOpen", 1, closed_orbits, true});

  FiberClass all;
  for (const auto& o : s.orbits) all.members.push_back(o.id);
  all.dense = "oOpen";
  s.fibers = {{all}};

  for (const auto& [id, orbit] : closed_params) {
    GeometricParameter p;
    p.id = id;
    p.orbit = orbit;
    p.local_system = "triv";
    p.generic_expected = false;
    s.parameters.push_back(p);
  }
  for (const auto& op : open_params) {
    GeometricParameter p;
    p.id = op.id;
    p.orbit = "oOpen";
    p.local_system = op.label;
    s.parameters.push_back(p);
  }

  // Oracle cycles.
  for (const auto& [id, orbit] : closed_params) out.oracle_cc[id] = {{orbit, 1}};
  for (const auto& op : open_params) {
    std::map<std::string, long long> cc = {{"oOpen", 1}};
    for (const auto& [orbit, nontriv] : op.monodromy_nontrivial)
      if (nontriv) cc[orbit] = 1;
    out.oracle_cc[op.id] = cc;
  }
  for (const auto& [orbit, count] : fixed_points_on)
    out.oracle_n[{orbit, "oOpen"}] = count;

  // Genericity fixtures: an open parameter is generic exactly when its
  // cycle is the bare open conormal class.
  for (auto& p : s.parameters) {
    if (p.orbit != "oOpen") continue;
    p.generic_expected = out.oracle_cc[p.id].size() == 1;
  }

  const int np = static_cast<int>(s.parameters.size());
  std::map<std::string, int> pidx;
  for (int i = 0; i < np; ++i) pidx[s.parameters[i].id] = i;

  IntMatrix m = IntMatrix::identity(np);
  for (const auto& op : open_params) {
    bool clean = out.oracle_cc[op.id].size() == 1;
    if (clean) m.at(pidx[op.id], pidx[op.id]) = -1;
  }
  for (const auto& [id, orbit] : closed_params) {
    for (const auto& op : open_params)
      if (!op.monodromy_nontrivial.at(orbit)) m.at(pidx[op.id], pidx[id]) = 1;
  }
  s.continuation = {m};

  if (kind == RankOneKind::Torus) {
    Automorphism swap;
    swap.name = "swap";
    swap.orbit_map = {{"o0", "oInf"}, {"oInf", "o0"}, {"oOpen", "oOpen"}};
    swap.parameter_map = {{"xi0", "xiInf"},
                          {"xiInf", "xi0"},
                          {"xiPlus", "xiPlus"},
                          {"xiMinus", "xiMinus"}};
    s.automorphisms.push_back(swap);
  }

  s.a_parameters.push_back({"psi_tempered", "oOpen", true, 0});
  s.a_parameters.push_back(
      {"psi_principal", closed_orbits.front(), false, 1});

  if (auto err = index_scenario(s)) throw StateError("rank-one generator: " + *err);
  return out;
}

}  // namespace orbitcc
