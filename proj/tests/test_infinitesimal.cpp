#include <doctest.h>

#include <random>
#include <set>

#include "orbitcc/infinitesimal.hpp"

using namespace orbitcc;

TEST_CASE("regularity per the integral-positivity rule") {
  auto a1 = RootDatum::builtin("A1");
  CHECK(is_regular(analyze_character(a1, {Rat(1)})));
  CHECK_FALSE(is_regular(analyze_character(a1, {Rat(0)})));

  // <alpha1, lambda> = 1/2 is ignored (non-integral); <alpha2, lambda> = -3
  // is integral and non-positive.
  auto a2 = RootDatum::builtin("A2");
  auto chi = analyze_character(a2, {Rat(1, 2), Rat(-3)});
  CHECK_FALSE(chi.regular);
  CHECK(analyze_character(a2, {Rat(1, 2), Rat(1, 3)}).regular);  // nothing integral
}

TEST_CASE("integral roots form the expected subsets") {
  auto a2 = RootDatum::builtin("A2");
  auto chi = analyze_character(a2, {Rat(1, 2), Rat(-3)});
  std::set<int> integral(chi.integral_roots.begin(), chi.integral_roots.end());
  CHECK(integral.count(1) == 1);                      // alpha2
  CHECK(integral.count(a2.negative_of(1)) == 1);      // -alpha2
  CHECK(integral.count(0) == 0);                      // alpha1 pairs to 1/2
  CHECK(integral.count(a2.root_index({1, 1})) == 0);  // pairs to -5/2
}

TEST_CASE("parabolic data on A1") {
  auto a1 = RootDatum::builtin("A1");
  auto at_rho = parabolic_data(a1, analyze_character(a1, {Rat(1)}));
  CHECK(at_rho.levi_roots.empty());
  CHECK(at_rho.nilradical_roots == std::vector<int>{0});
  auto at_zero = parabolic_data(a1, analyze_character(a1, {Rat(0)}));
  CHECK(at_zero.levi_roots.size() == 2);
  CHECK(at_zero.nilradical_roots.empty());
}

TEST_CASE("parabolic data on A2 at lambda = (1, 0)") {
  auto a2 = RootDatum::builtin("A2");
  auto p = parabolic_data(a2, analyze_character(a2, {Rat(1), Rat(0)}));
  std::set<int> levi(p.levi_roots.begin(), p.levi_roots.end());
  std::set<int> nil(p.nilradical_roots.begin(), p.nilradical_roots.end());
  CHECK(levi == std::set<int>{1, a2.negative_of(1)});
  CHECK(nil == std::set<int>{0, a2.root_index({1, 1})});
}

TEST_CASE("parabolic partition is exact for random rational lambda") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 4);
  for (const auto& name : RootDatum::builtin_names()) {
    auto d = RootDatum::builtin(name);
    for (int trial = 0; trial < 100; ++trial) {
      RatVec lambda;
      for (int k = 0; k < d.rank(); ++k) lambda.push_back(Rat(num(rng), den(rng)));
      auto chi = analyze_character(d, lambda);
      auto p = parabolic_data(d, chi);
      std::set<int> pieces;
      for (int r : p.levi_roots) CHECK(pieces.insert(r).second);
      for (int r : p.nilradical_roots) CHECK(pieces.insert(r).second);
      for (int r : p.nilradical_roots) CHECK(pieces.insert(d.negative_of(r)).second);
      std::set<int> integral(chi.integral_roots.begin(), chi.integral_roots.end());
      CHECK(pieces == integral);
    }
  }
}

TEST_CASE("e_class is the fractional part") {
  auto a1 = RootDatum::builtin("A1");
  CHECK(analyze_character(a1, {Rat(3, 2)}).e_class == RatVec{Rat(1, 2)});
  CHECK(analyze_character(a1, {Rat(-1, 2)}).e_class == RatVec{Rat(1, 2)});
  CHECK(analyze_character(a1, {Rat(2)}).e_class == RatVec{Rat(0)});
}
