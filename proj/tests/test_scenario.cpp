#include <doctest.h>

#include <fstream>

#include "orbitcc/errors.hpp"
#include "orbitcc/scenario.hpp"
#include "orbitcc/scenario_io.hpp"
#include "test_util.hpp"

using namespace orbitcc;

namespace {

bool has_issue(const ValidationReport& rep, const std::string& code) {
  for (const auto& i : rep.issues)
    if (i.code.rfind(code, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("generated rank-one scenarios validate cleanly") {
  auto torus = generate_rank_one(RankOneKind::Torus);
  CHECK(validate(torus.scenario).ok());
  CHECK(torus.scenario.orbits.size() == 3);
  CHECK(torus.scenario.parameters.size() == 4);
  CHECK(torus.scenario.orbits[torus.scenario.open_orbit()].id == "oOpen");

  auto norm = generate_rank_one(RankOneKind::Normalizer);
  CHECK(validate(norm.scenario).ok());
  CHECK(norm.scenario.orbits.size() == 2);
  CHECK(norm.scenario.parameters.size() == 3);
}

TEST_CASE("torus continuation matrix matches the rank-one recursion") {
  auto g = generate_rank_one(RankOneKind::Torus);
  const auto& s = g.scenario;
  const auto& m = s.continuation[0];
  auto col = [&](const std::string& id) {
    std::map<std::string, long long> out;
    int c = s.param_idx(id);
    for (int r = 0; r < m.n; ++r)
      if (m.at(r, c) != 0) out[s.parameters[r].id] = m.at(r, c);
    return out;
  };
  CHECK(col("xi0") == std::map<std::string, long long>{{"xi0", 1}, {"xiPlus", 1}});
  CHECK(col("xiInf") == std::map<std::string, long long>{{"xiInf", 1}, {"xiPlus", 1}});
  CHECK(col("xiPlus") == std::map<std::string, long long>{{"xiPlus", -1}});
  CHECK(col("xiMinus") == std::map<std::string, long long>{{"xiMinus", 1}});
  CHECK(g.oracle_n.at({"o0", "oOpen"}) == 1);
  CHECK(g.oracle_n.at({"oInf", "oOpen"}) == 1);
}

TEST_CASE("normalizer oracle fuses the fixed points") {
  auto g = generate_rank_one(RankOneKind::Normalizer);
  CHECK(g.oracle_cc.at("xiMinus") ==
        std::map<std::string, long long>{{"oOpen", 1}});
  CHECK(g.oracle_n.at({"oClosed", "oOpen"}) == 2);
  const auto& s = g.scenario;
  const auto& m = s.continuation[0];
  int c = s.param_idx("xiC");
  CHECK(m.at(s.param_idx("xiPlus"), c) == 1);
  CHECK(m.at(s.param_idx("xiMinus"), c) == 1);
  CHECK(m.at(s.param_idx("xiMinus"), s.param_idx("xiMinus")) == -1);
}

TEST_CASE("validation flags a broken involution") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto s = g.scenario;
  s.automorphisms.clear();
  for (auto& v : s.continuation[0].a) v *= 2;  // M -> 2M, so M^2 = 4I != I
  auto rep = validate(s);
  CHECK(has_issue(rep, "continuation.involution"));
}

TEST_CASE("validation flags a non-unique open orbit") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto s = g.scenario;
  s.orbits[0].dim = 1;  // second top-dimensional orbit
  auto rep = validate(s);
  CHECK(has_issue(rep, "structure"));
}

TEST_CASE("validation flags broken dichotomy and grading") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto s = g.scenario;
  s.automorphisms.clear();
  // Column xiMinus gets a mixed-sign column that is not -e.
  s.continuation[0].at(s.param_idx("xi0"), s.param_idx("xiMinus")) = -1;
  auto rep = validate(s);
  CHECK(has_issue(rep, "continuation"));

  auto t = g.scenario;
  t.orbits[2].closure_below = {};
  t.orbits[0].closure_below = {"oOpen"};  // point below nothing, open below point
  CHECK(has_issue(validate(t), "closure.grading"));
}

TEST_CASE("validation flags automorphisms that break structure") {
  auto g = generate_rank_one(RankOneKind::Torus);

  auto s = g.scenario;
  s.automorphisms[0].parameter_map["xi0"] = "xi0";  // no longer commutes with M
  s.automorphisms[0].parameter_map["xiInf"] = "xiInf";
  CHECK(has_issue(validate(s), "automorphism"));

  auto t = g.scenario;
  t.automorphisms[0].orbit_map["o0"] = "o0";  // parameters still swapped
  t.automorphisms[0].orbit_map["oInf"] = "oInf";
  CHECK(has_issue(validate(t), "automorphism"));
}

TEST_CASE("validation flags fiber classes without a unique dense member") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto s = g.scenario;
  s.automorphisms.clear();
  s.fibers[0] = {{{"o0", "oInf"}, "o0"}, {{"oOpen"}, "oOpen"}};
  CHECK(has_issue(validate(s), "fibers.dense"));

  auto t = g.scenario;
  t.automorphisms.clear();
  t.fibers[0] = {{{"o0", "oOpen"}, "oOpen"}};  // oInf missing entirely
  CHECK(has_issue(validate(t), "fibers.partition"));
}

TEST_CASE("save/load round trip is byte-identical") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto text = scenario_to_json_text(g.scenario);
  auto back = scenario_from_json_text(text, "roundtrip");
  CHECK(scenario_to_json_text(back) == text);
  CHECK(back.name == g.scenario.name);
  CHECK(back.parameters.size() == g.scenario.parameters.size());
}

TEST_CASE("parse errors name the offending block") {
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"name":"x","root_system":"A1","lambda":[1],
        "dim_X":1,"orbits":[],"fibers":[],"parameters":[]})",
                              "t"),
      doctest::Contains("continuation"), ParseError);
  CHECK_THROWS_AS(scenario_from_json_text("{", "t"), ParseError);
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"name":"x","root_system":"A1","lambda":[1],
        "dim_X":0,"orbits":[{"id":"o","dim":0,"closure_below":[]}],
        "fibers":[[{"members":["o"],"dense":"o"}]],
        "parameters":[{"id":"p","orbit":"o","local_system":"triv"}],
        "continuation":[[[0.5]]]})",
                              "t"),
      doctest::Contains("integer"), ParseError);
}

TEST_CASE("rationals parse from integers and p/q strings") {
  auto s = scenario_from_json_text(R"({"name":"x","root_system":"A1",
    "lambda":["1/2"],"dim_X":0,
    "orbits":[{"id":"o","dim":0,"closure_below":[]}],
    "fibers":[[{"members":["o"],"dense":"o"}]],
    "parameters":[{"id":"p","orbit":"o","local_system":"triv"}],
    "continuation":[[[1]]]})",
                                   "t");
  CHECK(s.lambda == RatVec{Rat(1, 2)});
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("fiber classes resolve per orbit and root") {
  auto a1t = testutil::load_valid("scenarios/a1t.json");
  const auto& cls = a1t.fiber_class_of(a1t.orbit_idx("oOpen"), 0);
  CHECK(cls.dense == "oOpen");
  CHECK(cls.members.size() == 3);
  CHECK(&a1t.fiber_class_of(a1t.orbit_idx("o0"), 0) == &cls);

  auto prod = testutil::load_valid("scenarios/a1xa1.json");
  const auto& pcls =
      prod.fiber_class_of(prod.orbit_idx(product_id("oOpen", "o0")), 1);
  CHECK(pcls.dense == product_id("oOpen", "oOpen"));
  std::set<std::string> members(pcls.members.begin(), pcls.members.end());
  CHECK(members == std::set<std::string>{product_id("oOpen", "o0"),
                                         product_id("oOpen", "oInf"),
                                         product_id("oOpen", "oOpen")});
}

TEST_CASE("shipped product file equals the product construction") {
  auto a1t = generate_rank_one(RankOneKind::Torus);
  auto prod = product(a1t.scenario, a1t.scenario);
  prod.name = "a1xa1";
  std::ifstream in(testutil::data_path("scenarios/a1xa1.json"));
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(scenario_to_json_text(prod) == text);
}

TEST_CASE("every shipped scenario file validates") {
  for (const auto& rel : testutil::full_corpus()) {
    auto s = load_scenario(testutil::data_path(rel));
    auto rep = validate(s);
    INFO(rel, ": ", rep.to_string());
    CHECK(rep.ok());
  }
  for (const auto& rel :
       {"fixtures/a1t_nosym.json", "fixtures/cc_infeasible.json",
        "fixtures/a1t_badpsi.json"}) {
    auto s = load_scenario(testutil::data_path(rel));
    CHECK(validate(s).ok());
  }
}
