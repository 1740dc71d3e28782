#pragma once

#include <vector>

#include "orbitcc/root_datum.hpp"

namespace orbitcc {

/// A Weyl group element as a word in simple reflections. Words act on
/// weights right to left, so act(compose(w1, w2), x) = act(w1, act(w2, x)).
struct WeylElement {
  std::vector<int> word;

  static WeylElement identity() { return {}; }
  static WeylElement simple(int i) { return {{i}}; }
};

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);

/// The permutation the element induces on the datum's root list.
std::vector<int> root_permutation(const RootDatum& d, const WeylElement& w);

/// Number of positive roots sent negative.
int weyl_length(const RootDatum& d, const WeylElement& w);

bool weyl_equal(const RootDatum& d, const WeylElement& a, const WeylElement& b);

/// Canonical reduced word: greedy peeling of the smallest left descent.
WeylElement canonicalize(const RootDatum& d, const WeylElement& w);

RatVec weyl_act(const RootDatum& d, const WeylElement& w, const RatVec& lambda);

}  // namespace orbitcc
