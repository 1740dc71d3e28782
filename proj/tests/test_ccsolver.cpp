#include <doctest.h>

#include "orbitcc/ccsolver.hpp"
#include "orbitcc/errors.hpp"
#include "test_util.hpp"

using namespace orbitcc;

namespace {

ConormalCycle cycle(std::map<std::string, long long> coeffs) {
  return ConormalCycle(std::move(coeffs));
}

}  // namespace

TEST_CASE("seeding emits support, normalization, smoothness and symmetry") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto cs = seed_constraints(g.scenario);

  CHECK(cs.support.at("xi0") == std::vector<std::string>{"o0"});
  CHECK(cs.fixed.at({"xi0", "o0"}) ==
        std::make_pair(1LL, FixReason::Normalization));

  // Smooth closure with trivial local system pins the whole cycle.
  CHECK(cs.fixed.at({"xiPlus", "o0"}) ==
        std::make_pair(0LL, FixReason::SmoothClosure));
  CHECK(cs.fixed.at({"xiPlus", "oInf"}) ==
        std::make_pair(0LL, FixReason::SmoothClosure));

  // The swap automorphism fixes both open parameters, tying their point
  // coefficients pairwise.
  REQUIRE(cs.symmetry_classes.size() == 2);
  bool found = false;
  for (const auto& members : cs.symmetry_classes) {
    std::set<std::pair<std::string, std::string>> cls(members.begin(),
                                                      members.end());
    if (cls == std::set<std::pair<std::string, std::string>>{
                   {"xiMinus", "o0"}, {"xiMinus", "oInf"}})
      found = true;
  }
  CHECK(found);

  REQUIRE(cs.n_slots.size() == 1);
  CHECK(cs.n_slots[0].size() == 2);
}

TEST_CASE("tau rule zeroes horizontal orbits in the seeded constraints") {
  auto s = testutil::load_valid("scenarios/a1n.json");
  auto cs = seed_constraints(s);
  CHECK(cs.fixed.at({"xiMinus", "oClosed"}) ==
        std::make_pair(0LL, FixReason::TauRule));
}

TEST_CASE("seeding refuses singular scenarios") {
  auto s = testutil::load_valid("scenarios/a1_point.json");
  CHECK_THROWS_AS(seed_constraints(s), StateError);
  CHECK_THROWS_AS(solve(s), StateError);
  CHECK_THROWS_AS(seed_constraints(s, 0), InputError);
}

TEST_CASE("rank-one tables match the generator oracle exactly") {
  for (auto kind : {RankOneKind::Torus, RankOneKind::Normalizer}) {
    auto g = generate_rank_one(kind);
    auto res = solve(g.scenario);
    REQUIRE(res.table.status == SolveStatus::Unique);
    for (const auto& [pid, expected] : g.oracle_cc) {
      CHECK(res.table.entries.at(pid) == cycle(expected));
    }
    for (const auto& [slot, n] : g.oracle_n)
      CHECK(res.n_values.at({0, slot.first, slot.second}) == n);
    CHECK(equivariance_audit(g.scenario, res.table, res.operators).ok());
  }
}

TEST_CASE("solver is deterministic") {
  auto s = testutil::load_valid("scenarios/a2.json");
  auto r1 = solve(s);
  auto r2 = solve(s);
  REQUIRE(r1.table.status == SolveStatus::Unique);
  CHECK(r1.table.entries == r2.table.entries);
  CHECK(r1.n_values == r2.n_values);
}

TEST_CASE("A2 table is forced uniquely") {
  auto s = testutil::load_valid("scenarios/a2.json");
  auto res = solve(s);
  REQUIRE(res.table.status == SolveStatus::Unique);
  CHECK(res.table.entries.at("zeta1") == cycle({{"O1", 1}}));
  CHECK(res.table.entries.at("zeta2") == cycle({{"O2", 1}}));
  CHECK(res.table.entries.at("zeta3") == cycle({{"O3", 1}}));
  CHECK(res.table.entries.at("eta00") == cycle({{"O4", 1}}));
  CHECK(res.table.entries.at("eta01") == cycle({{"O4", 1}, {"O3", 1}}));
  CHECK(res.table.entries.at("eta10") == cycle({{"O4", 1}, {"O2", 1}}));
  CHECK(res.table.entries.at("eta11") ==
        cycle({{"O4", 1}, {"O3", 1}, {"O2", 1}, {"O1", 1}}));
  CHECK(res.n_values.at({0, "O2", "O4"}) == 2);
  CHECK(res.n_values.at({0, "O1", "O3"}) == 1);
  CHECK(res.n_values.at({0, "O2", "O3"}) == 1);
  CHECK(res.n_values.at({1, "O3", "O4"}) == 2);
  CHECK(res.n_values.at({1, "O1", "O2"}) == 1);
  CHECK(res.n_values.at({1, "O3", "O2"}) == 1);
}

TEST_CASE("B2 table is diagonal with a doubled reflection coefficient") {
  auto s = testutil::load_valid("scenarios/b2.json");
  auto res = solve(s);
  REQUIRE(res.table.status == SolveStatus::Unique);
  CHECK(res.table.entries.at("zeta0") == cycle({{"S0", 1}}));
  CHECK(res.table.entries.at("zeta1t") == cycle({{"S1", 1}}));
  CHECK(res.table.entries.at("zeta1s") == cycle({{"S1", 1}}));
  CHECK(res.table.entries.at("xiPlus") == cycle({{"Sopen", 1}}));
  CHECK(res.table.entries.at("xiMinus") == cycle({{"Sopen", 1}}));
  CHECK(res.n_values.at({1, "S0", "S1"}) == 2);
  CHECK(res.n_values.at({0, "S1", "Sopen"}) == 1);
  CHECK(res.n_values.at({0, "S1", "S0"}) == 1);
}

TEST_CASE("product table is the tensor of the factors") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto prod = testutil::load_valid("scenarios/a1xa1.json");
  auto res = solve(prod);
  REQUIRE(res.table.status == SolveStatus::Unique);
  for (const auto& [pa, ca] : g.oracle_cc)
    for (const auto& [pb, cb] : g.oracle_cc) {
      std::map<std::string, long long> expected;
      for (const auto& [oa, ma] : ca)
        for (const auto& [ob, mb] : cb) expected[product_id(oa, ob)] = ma * mb;
      INFO(product_id(pa, pb));
      CHECK(res.table.entries.at(product_id(pa, pb)) == cycle(expected));
    }
}

TEST_CASE("stripping the symmetry yields the a+b=2 family") {
  auto s = testutil::load_valid("fixtures/a1t_nosym.json");
  auto res = solve(s);
  CHECK(res.table.status == SolveStatus::Ambiguous);
  CHECK(res.table.description.find("chi[xiMinus][o0]") != std::string::npos);
  CHECK(res.table.description.find("(0,2)") != std::string::npos);
  CHECK(res.table.description.find("(1,1)") != std::string::npos);
  CHECK(res.table.description.find("(2,0)") != std::string::npos);
  CHECK_THROWS_AS(chi_mic(res.table, "o0", "xiMinus"), StateError);
}

TEST_CASE("contradictory continuation data is infeasible") {
  auto s = testutil::load_valid("fixtures/cc_infeasible.json");
  auto res = solve(s);
  CHECK(res.table.status == SolveStatus::Infeasible);
  CHECK(res.table.description.find("xiPlus") != std::string::npos);
}

TEST_CASE("chi_mic reads solved multiplicities") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto res = solve(g.scenario);
  REQUIRE(res.table.status == SolveStatus::Unique);
  CHECK(chi_mic(res.table, "oOpen", "xiMinus") == 1);
  CHECK(chi_mic(res.table, "o0", "xiPlus") == 0);
  for (const auto& p : g.scenario.parameters)
    CHECK(chi_mic(res.table, p.orbit, p.id) == 1);
  CHECK_THROWS_AS(chi_mic(res.table, "oOpen", "nope"), InputError);
}

TEST_CASE("audit flags a zeroed reflection coefficient") {
  auto g = generate_rank_one(RankOneKind::Torus);
  auto res = solve(g.scenario);
  REQUIRE(res.table.status == SolveStatus::Unique);

  NAssignment mutated = {{{"o0", "oOpen"}, 0}, {{"oInf", "oOpen"}, 1}};
  auto bad_op = ReflectionOperator::build(g.scenario, 0, mutated);
  auto report = equivariance_audit(g.scenario, res.table, {bad_op});
  REQUIRE(!report.ok());
  CHECK(report.mismatches.front().param == "xi0");
  CHECK(report.mismatches.front().root == 0);
  CHECK(report.mismatches.front().lhs ==
        ConormalCycle::basis("o0") + ConormalCycle::basis("oOpen"));
  CHECK(report.mismatches.front().rhs == ConormalCycle::basis("o0"));
}

TEST_CASE("resolved operators and tables audit clean on the whole corpus") {
  for (const auto& rel : testutil::regular_corpus()) {
    auto s = testutil::load_valid(rel);
    auto res = solve(s);
    REQUIRE(res.table.status == SolveStatus::Unique);
    for (const auto& [pid, c] : res.table.entries) {
      for (const auto& [orbit, mult] : c.coefficients()) CHECK(mult >= 0);
      CHECK(c.coeff(s.parameters[s.param_idx(pid)].orbit) == 1);
    }
    CHECK(equivariance_audit(s, res.table, res.operators).ok());
  }
}

TEST_CASE("solve respects a tighter bound") {
  auto s = testutil::load_valid("scenarios/a1t.json");
  auto res = solve(s, 1);
  CHECK(res.table.status == SolveStatus::Unique);
}
