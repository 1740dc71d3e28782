#include "orbitcc/infinitesimal.hpp"

#include "orbitcc/errors.hpp"

namespace orbitcc {

InfinitesimalCharacter analyze_character(const RootDatum& d, RatVec lambda) {
  if (static_cast<int>(lambda.size()) != d.rank())
    throw InputError("lambda has wrong dimension for this root datum");
  InfinitesimalCharacter chi;
  chi.lambda = std::move(lambda);
  chi.regular = true;
  for (int i = 0; i < d.num_roots(); ++i) {
    Rat p = d.pairing(i, chi.lambda);
    if (is_integer(p)) {
      chi.integral_roots.push_back(i);
      if (d.is_positive(i) && p <= Rat(0)) chi.regular = false;
    }
  }
  chi.e_class.reserve(chi.lambda.size());
  for (const auto& c : chi.lambda) chi.e_class.push_back(frac_part(c));
  return chi;
}

bool is_regular(const InfinitesimalCharacter& chi) { return chi.regular; }

ParabolicData parabolic_data(const RootDatum& d, const InfinitesimalCharacter& chi) {
  ParabolicData p;
  for (int i : chi.integral_roots) {
    p.group_lambda_roots.push_back(i);
    Rat v = d.pairing(i, chi.lambda);
    if (v == Rat(0))
      p.levi_roots.push_back(i);
    else if (v > Rat(0))
      p.nilradical_roots.push_back(i);
  }
  return p;
}

}  // namespace orbitcc
