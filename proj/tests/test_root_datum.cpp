#include <doctest.h>

#include "orbitcc/errors.hpp"
#include "orbitcc/root_datum.hpp"

using namespace orbitcc;

TEST_CASE("builtin root counts") {
  CHECK(RootDatum::builtin("A1").num_roots() == 2);
  CHECK(RootDatum::builtin("A1xA1").num_roots() == 4);
  CHECK(RootDatum::builtin("A2").num_roots() == 6);
  CHECK(RootDatum::builtin("B2").num_roots() == 8);
  CHECK(RootDatum::builtin("C2").num_roots() == 8);
  CHECK_THROWS_AS(RootDatum::builtin("E8"), InputError);
}

TEST_CASE("pairing in fundamental-coweight coordinates") {
  auto a1 = RootDatum::builtin("A1");
  CHECK(a1.pairing(0, {Rat(1)}) == Rat(1));
  CHECK(a1.pairing(0, {Rat(0)}) == Rat(0));

  auto a2 = RootDatum::builtin("A2");
  int highest = a2.root_index({1, 1});
  REQUIRE(highest >= 0);
  CHECK(a2.pairing(highest, {Rat(1), Rat(1)}) == Rat(2));

  CHECK_THROWS_AS(a1.pairing(0, {Rat(1), Rat(1)}), InputError);
  CHECK_THROWS_AS(a1.pairing(7, {Rat(1)}), InputError);
}

TEST_CASE("matched pairs satisfy <alpha, alpha_vee> = 2") {
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    for (int i = 0; i < d.num_roots(); ++i) CHECK(d.pair_root_coroot(i, i) == 2);
  }
}

TEST_CASE("root sets are stable under all simple reflections") {
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    for (int s = 0; s < d.rank(); ++s) {
      std::vector<bool> hit(d.num_roots(), false);
      for (int r = 0; r < d.num_roots(); ++r) {
        int image = d.reflect_root(s, r);
        REQUIRE(image >= 0);
        REQUIRE(image < d.num_roots());
        CHECK_FALSE(hit[image]);
        hit[image] = true;
      }
    }
  }
}

TEST_CASE("roots decompose with a single sign in the simple basis") {
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    for (int r = 0; r < d.num_roots(); ++r) {
      const auto& v = d.root(r);
      bool nonneg = true, nonpos = true;
      for (auto x : v) {
        nonneg = nonneg && x >= 0;
        nonpos = nonpos && x <= 0;
      }
      CHECK((nonneg || nonpos));
      CHECK(d.is_positive(r) == nonneg);
      CHECK(d.negative_of(d.negative_of(r)) == r);
    }
  }
}

TEST_CASE("B2 cartan pairings") {
  auto b2 = RootDatum::builtin("B2");
  CHECK(b2.pair_root_coroot(1, 0) == -1);  // <alpha_2, alpha_1^vee>
  CHECK(b2.pair_root_coroot(0, 1) == -2);  // <alpha_1, alpha_2^vee>
  CHECK(b2.bond(0, 1) == 4);
  CHECK(RootDatum::builtin("A2").bond(0, 1) == 3);
  CHECK(RootDatum::builtin("A1xA1").bond(0, 1) == 2);
}

TEST_CASE("bad cartan matrices are rejected") {
  CHECK_THROWS_AS(RootDatum::from_cartan({{2, -1}, {-4, 2}}), InputError);
  CHECK_THROWS_AS(RootDatum::from_cartan({{1}}), InputError);
  CHECK_THROWS_AS(RootDatum::from_cartan({{2, 1}, {1, 2}}), InputError);
}
