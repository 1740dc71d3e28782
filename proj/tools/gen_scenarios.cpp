// Emits the shipped scenario corpus, fixtures and pairing files.
//
// Every file is rebuilt from the constructions below, validated, and (for
// the regular corpus) solved to check that the table is unique before
// anything is written. Derivation notes for the curated rank-two data live
// in docs/scenarios.md.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "orbitcc/ccsolver.hpp"
#include "orbitcc/errors.hpp"
#include "orbitcc/scenario.hpp"
#include "orbitcc/scenario_io.hpp"
#include "orbitcc/translation.hpp"

namespace fs = std::filesystem;
using namespace orbitcc;

namespace {

using Columns = std::map<std::string, std::vector<std::pair<std::string, long long>>>;

IntMatrix matrix_from_columns(const std::vector<std::string>& params,
                              const Columns& cols) {
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(params.size()); ++i) idx[params[i]] = i;
  IntMatrix m;
  m.n = static_cast<int>(params.size());
  m.a.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (const auto& [col, entries] : cols)
    for (const auto& [row, value] : entries) m.at(idx.at(row), idx.at(col)) = value;
  return m;
}

GeometricScenario build_a2() {
  GeometricScenario s;
  s.name = "a2";
  s.datum = RootDatum::builtin("A2");
  s.lambda = {Rat(1), Rat(1)};
  s.dim_X = 3;
  s.orbits = {{"O1", 1, {}, true},
              {"O2", 2, {"O1"}, true},
              {"O3", 2, {"O1"}, true},
              {"O4", 3, {"O1", "O2", "O3"}, true}};
  s.fibers = {{{{"O2", "O4"}, "O4"}, {{"O1", "O3"}, "O3"}},
              {{{"O3", "O4"}, "O4"}, {{"O1", "O2"}, "O2"}}};
  auto param = [](std::string id, std::string orbit, std::string sys, bool gen) {
    GeometricParameter p;
    p.id = std::move(id);
    p.orbit = std::move(orbit);
    p.local_system = std::move(sys);
    p.generic_expected = gen;
    return p;
  };
  s.parameters = {param("zeta1", "O1", "triv", false),
                  param("zeta2", "O2", "triv", false),
                  param("zeta3", "O3", "triv", false),
                  param("eta00", "O4", "triv", true),
                  param("eta01", "O4", "sgn2", false),
                  param("eta10", "O4", "sgn1", false),
                  param("eta11", "O4", "sgn12", false)};
  std::vector<std::string> order = {"zeta1", "zeta2", "zeta3", "eta00",
                                    "eta01", "eta10", "eta11"};
  s.continuation = {
      matrix_from_columns(order,
                          {{"zeta1", {{"zeta1", 1}, {"zeta3", 1}}},
                           {"zeta2", {{"zeta2", 1}, {"eta00", 1}, {"eta01", 1}}},
                           {"zeta3", {{"zeta3", -1}}},
                           {"eta00", {{"eta00", -1}}},
                           {"eta01", {{"eta01", -1}}},
                           {"eta10", {{"eta10", 1}, {"zeta3", 1}}},
                           {"eta11", {{"eta11", 1}}}}),
      matrix_from_columns(order,
                          {{"zeta1", {{"zeta1", 1}, {"zeta2", 1}}},
                           {"zeta2", {{"zeta2", -1}}},
                           {"zeta3", {{"zeta3", 1}, {"eta00", 1}, {"eta10", 1}}},
                           {"eta00", {{"eta00", -1}}},
                           {"eta01", {{"eta01", 1}, {"zeta2", 1}}},
                           {"eta10", {{"eta10", -1}}},
                           {"eta11", {{"eta11", 1}}}})};
  s.a_parameters = {{"psi_tempered", "O4", true, 0},
                    {"psi_principal", "O1", false, 2}};
  return s;
}

GeometricScenario build_b2() {
  GeometricScenario s;
  s.name = "b2";
  s.datum = RootDatum::builtin("B2");
  s.lambda = {Rat(1), Rat(1)};
  s.dim_X = 4;
  s.orbits = {{"S0", 2, {}, true},
              {"S1", 3, {"S0"}, true},
              {"Sopen", 4, {"S0", "S1"}, true}};
  s.fibers = {{{{"S0"}, "S0"}, {{"S1", "Sopen"}, "Sopen"}},
              {{{"S0", "S1"}, "S1"}, {{"Sopen"}, "Sopen"}}};
  auto param = [](std::string id, std::string orbit, std::string sys, bool gen) {
    GeometricParameter p;
    p.id = std::move(id);
    p.orbit = std::move(orbit);
    p.local_system = std::move(sys);
    p.generic_expected = gen;
    return p;
  };
  s.parameters = {param("zeta0", "S0", "triv", false),
                  param("zeta1t", "S1", "triv", false),
                  param("zeta1s", "S1", "sgn", false),
                  param("xiPlus", "Sopen", "triv", true),
                  param("xiMinus", "Sopen", "sgn", true)};
  std::vector<std::string> order = {"zeta0", "zeta1t", "zeta1s", "xiPlus", "xiMinus"};
  s.continuation = {
      matrix_from_columns(order,
                          {{"zeta0", {{"zeta0", -1}}},
                           {"zeta1t", {{"zeta1t", 1}, {"zeta0", 1}, {"xiPlus", 1}}},
                           {"zeta1s", {{"zeta1s", 1}, {"zeta0", 1}, {"xiMinus", 1}}},
                           {"xiPlus", {{"xiPlus", -1}}},
                           {"xiMinus", {{"xiMinus", -1}}}}),
      matrix_from_columns(order,
                          {{"zeta0", {{"zeta0", 1}, {"zeta1t", 1}, {"zeta1s", 1}}},
                           {"zeta1t", {{"zeta1t", -1}}},
                           {"zeta1s", {{"zeta1s", -1}}},
                           {"xiPlus", {{"xiPlus", -1}}},
                           {"xiMinus", {{"xiMinus", -1}}}})};
  Automorphism g;
  g.name = "sgn_swap";
  g.orbit_map = {{"S0", "S0"}, {"S1", "S1"}, {"Sopen", "Sopen"}};
  g.parameter_map = {{"zeta0", "zeta0"},
                     {"zeta1t", "zeta1s"},
                     {"zeta1s", "zeta1t"},
                     {"xiPlus", "xiMinus"},
                     {"xiMinus", "xiPlus"}};
  s.automorphisms = {g};
  s.a_parameters = {{"psi_tempered", "Sopen", true, 0},
                    {"psi_principal", "S0", false, 2}};
  return s;
}

GeometricScenario build_a1_point() {
  GeometricScenario s;
  s.name = "a1_point";
  s.datum = RootDatum::builtin("A1");
  s.lambda = {Rat(0)};
  s.dim_X = 0;
  s.orbits = {{"oPt", 0, {}, true}};
  s.fibers = {{{{"oPt"}, "oPt"}}};
  GeometricParameter p;
  p.id = "xiPt";
  p.orbit = "oPt";
  p.local_system = "triv";
  p.generic_expected = true;  // transported flag: its translate is generic
  s.parameters = {p};
  s.continuation = {IntMatrix::identity(1)};
  return s;
}

GeometricScenario build_a1xa1_wall(const GeometricScenario& a1t) {
  GeometricScenario s;
  s.name = "a1xa1_wall";
  s.datum = RootDatum::builtin("A1xA1");
  s.lambda = {Rat(0), Rat(1)};
  s.dim_X = 1;
  s.orbits = {{"o0", 0, {}, true},
              {"oInf", 0, {}, true},
              {"oOpen", 1, {"o0", "oInf"}, true}};
  s.fibers = {{{{"o0"}, "o0"}, {{"oInf"}, "oInf"}, {{"oOpen"}, "oOpen"}},
              {{{"o0", "oInf", "oOpen"}, "oOpen"}}};
  s.parameters = a1t.parameters;
  // Transported flags: only xiPlus translates to the generic product
  // parameter xiPlus.xiPlus.
  for (auto& p : s.parameters) p.generic_expected = (p.id == "xiPlus");
  s.continuation = {IntMatrix::identity(4), a1t.continuation[0]};
  s.automorphisms = a1t.automorphisms;
  return s;
}

TranslationPairing build_a1_pairing() {
  TranslationPairing p;
  p.singular_scenario = "a1_point";
  p.regular_scenario = "a1t";
  p.lambda_singular = {Rat(0)};
  p.lambda_regular = {Rat(1)};
  p.orbit_preimages["oPt"] = {{"o0", "oInf", "oOpen"}, "oOpen"};
  p.parameter_map = {{"xiPt", "xiPlus"}};
  p.fiber_dim = 1;
  return p;
}

TranslationPairing build_a1t_identity_pairing() {
  TranslationPairing p;
  p.singular_scenario = "a1t";
  p.regular_scenario = "a1t";
  p.lambda_singular = {Rat(1)};
  p.lambda_regular = {Rat(1)};
  for (const auto& id : {"o0", "oInf", "oOpen"})
    p.orbit_preimages[id] = {{id}, id};
  for (const auto& id : {"xi0", "xiInf", "xiPlus", "xiMinus"})
    p.parameter_map[id] = id;
  p.fiber_dim = 0;
  return p;
}

TranslationPairing build_a1xa1_wall_pairing() {
  TranslationPairing p;
  p.singular_scenario = "a1xa1_wall";
  p.regular_scenario = "a1xa1";
  p.lambda_singular = {Rat(0), Rat(1)};
  p.lambda_regular = {Rat(1), Rat(1)};
  for (const auto& id : {"o0", "oInf", "oOpen"}) {
    OrbitPreimage pre;
    for (const auto& left : {"o0", "oInf", "oOpen"})
      pre.members.push_back(product_id(left, id));
    pre.open_member = product_id("oOpen", id);
    p.orbit_preimages[id] = pre;
  }
  for (const auto& id : {"xi0", "xiInf", "xiPlus", "xiMinus"})
    p.parameter_map[id] = product_id("xiPlus", id);
  p.fiber_dim = 1;
  return p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw StateError("generation check failed: " + what);
}

void write_scenario(GeometricScenario s, const fs::path& path,
                    SolveStatus expected_status, bool solve_it = true) {
  auto report = validate(s);
  require(report.ok(), path.string() + " validation:\n" + report.to_string());
  if (solve_it) {
    auto res = solve(s);
    require(res.table.status == expected_status,
            path.string() + " solve status " + to_string(res.table.status) +
                ", expected " + to_string(expected_status));
  }
  fs::create_directories(path.parent_path());
  save_scenario(s, path.string());
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : "data";
  try {
    auto a1t = generate_rank_one(RankOneKind::Torus);
    auto a1n = generate_rank_one(RankOneKind::Normalizer);
    write_scenario(a1t.scenario, root / "scenarios/a1t.json", SolveStatus::Unique);
    write_scenario(a1n.scenario, root / "scenarios/a1n.json", SolveStatus::Unique);

    auto a1xa1 = product(a1t.scenario, a1t.scenario);
    a1xa1.name = "a1xa1";
    write_scenario(a1xa1, root / "scenarios/a1xa1.json", SolveStatus::Unique);

    write_scenario(build_a2(), root / "scenarios/a2.json", SolveStatus::Unique);
    write_scenario(build_b2(), root / "scenarios/b2.json", SolveStatus::Unique);

    write_scenario(build_a1_point(), root / "scenarios/a1_point.json",
                   SolveStatus::Unique, /*solve_it=*/false);
    write_scenario(build_a1xa1_wall(a1t.scenario),
                   root / "scenarios/a1xa1_wall.json", SolveStatus::Unique,
                   /*solve_it=*/false);

    auto nosym = a1t.scenario;
    nosym.name = "a1t_nosym";
    nosym.automorphisms.clear();
    write_scenario(nosym, root / "fixtures/a1t_nosym.json", SolveStatus::Ambiguous);

    auto infeasible = a1t.scenario;
    infeasible.name = "cc_infeasible";
    infeasible.continuation = {IntMatrix::identity(4)};
    write_scenario(infeasible, root / "fixtures/cc_infeasible.json",
                   SolveStatus::Infeasible);

    auto badpsi = a1t.scenario;
    badpsi.name = "a1t_badpsi";
    badpsi.a_parameters = {{"psi_bad", "oOpen", false, 0}};
    write_scenario(badpsi, root / "fixtures/a1t_badpsi.json", SolveStatus::Unique);

    fs::create_directories(root / "pairings");
    save_pairing(build_a1_pairing(), (root / "pairings/a1_pairing.json").string());
    save_pairing(build_a1t_identity_pairing(),
                 (root / "pairings/a1t_identity_pairing.json").string());
    save_pairing(build_a1xa1_wall_pairing(),
                 (root / "pairings/a1xa1_wall_pairing.json").string());
    std::cout << "wrote pairing files under " << (root / "pairings").string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
