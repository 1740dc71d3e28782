#include <doctest.h>

#include <random>

#include "orbitcc/errors.hpp"
#include "orbitcc/weyl.hpp"

using namespace orbitcc;

TEST_CASE("simple reflections square to the identity") {
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    for (int i = 0; i < d.rank(); ++i) {
      WeylElement ss{{i, i}};
      CHECK(weyl_equal(d, ss, WeylElement::identity()));
      CHECK(weyl_length(d, WeylElement::simple(i)) == 1);
    }
  }
}

TEST_CASE("braid relations hold as root permutations") {
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    for (int i = 0; i < d.rank(); ++i)
      for (int j = i + 1; j < d.rank(); ++j) {
        int m = d.bond(i, j);
        WeylElement lhs, rhs;
        for (int k = 0; k < m; ++k) {
          lhs.word.push_back(k % 2 == 0 ? i : j);
          rhs.word.push_back(k % 2 == 0 ? j : i);
        }
        CHECK(weyl_equal(d, lhs, rhs));
      }
  }
}

TEST_CASE("weyl action on weights") {
  auto a1 = RootDatum::builtin("A1");
  RatVec rho = {Rat(1)};
  CHECK(weyl_act(a1, WeylElement::identity(), rho) == rho);
  CHECK(weyl_act(a1, WeylElement::simple(0), rho) == RatVec{Rat(-1)});

  auto a2 = RootDatum::builtin("A2");
  RatVec rho2 = {Rat(1), Rat(1)};
  WeylElement w0{{0, 1, 0}};
  CHECK(weyl_act(a2, w0, rho2) == RatVec{Rat(-1), Rat(-1)});
  CHECK_THROWS_AS(weyl_act(a2, w0, rho), InputError);
}

TEST_CASE("action is compatible with composition") {
  std::mt19937 rng(2024);
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    std::uniform_int_distribution<int> letter(0, d.rank() - 1);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      WeylElement w1, w2;
      for (int k = 0; k < 4; ++k) {
        w1.word.push_back(letter(rng));
        w2.word.push_back(letter(rng));
      }
      RatVec lambda;
      for (int k = 0; k < d.rank(); ++k) lambda.push_back(Rat(num(rng), 2));
      CHECK(weyl_act(d, weyl_compose(w1, w2), lambda) ==
            weyl_act(d, w1, weyl_act(d, w2, lambda)));
    }
  }
}

TEST_CASE("canonical forms are reduced and faithful") {
  std::mt19937 rng(7);
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    std::uniform_int_distribution<int> letter(0, d.rank() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      WeylElement w;
      int len = trial % 7;
      for (int k = 0; k < len; ++k) w.word.push_back(letter(rng));
      auto canon = canonicalize(d, w);
      CHECK(weyl_equal(d, canon, w));
      CHECK(static_cast<int>(canon.word.size()) == weyl_length(d, w));
    }
  }

  auto a2 = RootDatum::builtin("A2");
  auto trivial = canonicalize(a2, WeylElement{{1, 0, 1, 1, 0, 1}});
  CHECK(trivial.word.empty());
  auto w0 = canonicalize(a2, WeylElement{{1, 0, 1}});
  CHECK(w0.word == std::vector<int>{0, 1, 0});  // braid-normalized long element
}
