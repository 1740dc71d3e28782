#pragma once

#include <vector>

#include "orbitcc/root_datum.hpp"

namespace orbitcc {

/// A rational weight together with its integrality data.
///
/// `regular` means every integral positive root pairs to a strictly
/// positive integer; `e_class` is lambda modulo the cocharacter lattice
/// (in the fixed coordinates, the fractional parts).
struct InfinitesimalCharacter {
  RatVec lambda;
  std::vector<int> integral_roots;  // indices into the datum's root list
  bool regular = false;
  RatVec e_class;
};

InfinitesimalCharacter analyze_character(const RootDatum& d, RatVec lambda);

bool is_regular(const InfinitesimalCharacter& chi);

/// Integral roots partitioned by the sign of their pairing with lambda.
struct ParabolicData {
  std::vector<int> levi_roots;        // pairing 0
  std::vector<int> nilradical_roots;  // pairing a positive integer
  std::vector<int> group_lambda_roots;  // all integral roots
};

ParabolicData parabolic_data(const RootDatum& d, const InfinitesimalCharacter& chi);

}  // namespace orbitcc
