#pragma once

#include <map>
#include <set>
#include <string>

#include "orbitcc/scenario.hpp"

namespace orbitcc {

/// Integer combination of geometric parameters.
class KGroupElement {
 public:
  KGroupElement() = default;
  static KGroupElement basis(const std::string& param_id);

  long long coeff(const std::string& param_id) const;
  void set(const std::string& param_id, long long value);
  const std::map<std::string, long long>& coefficients() const { return c_; }

  KGroupElement& operator+=(const KGroupElement& rhs);
  friend KGroupElement operator+(KGroupElement a, const KGroupElement& b);
  friend KGroupElement operator*(long long k, KGroupElement a);
  bool operator==(const KGroupElement& rhs) const { return c_ == rhs.c_; }

 private:
  std::map<std::string, long long> c_;
};

/// Column action of the scenario's continuation matrix for one simple root.
KGroupElement continuation_act(const GeometricScenario& s, int root,
                               const KGroupElement& x);

struct TauInvariant {
  std::set<int> dmodule_tau;  // roots whose column at the parameter is -e
  std::set<int> rep_tau;      // complement
};

TauInvariant tau_invariant(const GeometricScenario& s, const std::string& param_id);

/// Generic means the full simple set acts by -1, i.e. rep_tau is empty.
/// Only defined at regular lambda; singular scenarios get their flags by
/// translation transport.
bool is_generic(const GeometricScenario& s, const std::string& param_id);

}  // namespace orbitcc
