#include "orbitcc/kgroup.hpp"

#include "orbitcc/errors.hpp"

namespace orbitcc {

KGroupElement KGroupElement::basis(const std::string& param_id) {
  KGroupElement x;
  x.c_[param_id] = 1;
  return x;
}

long long KGroupElement::coeff(const std::string& param_id) const {
  auto it = c_.find(param_id);
  return it == c_.end() ? 0 : it->second;
}

void KGroupElement::set(const std::string& param_id, long long value) {
  if (value == 0)
    c_.erase(param_id);
  else
    c_[param_id] = value;
}

KGroupElement& KGroupElement::operator+=(const KGroupElement& rhs) {
  for (const auto& [k, v] : rhs.c_) set(k, coeff(k) + v);
  return *this;
}

KGroupElement operator+(KGroupElement a, const KGroupElement& b) { return a += b; }

KGroupElement operator*(long long k, KGroupElement a) {
  if (k == 0) return {};
  for (auto& [key, v] : a.c_) v *= k;
  return a;
}

KGroupElement continuation_act(const GeometricScenario& s, int root,
                               const KGroupElement& x) {
  if (root < 0 || root >= s.datum.rank())
    throw InputError("root index out of range");
  const auto& m = s.continuation[root];
  KGroupElement out;
  for (const auto& [pid, coeff] : x.coefficients()) {
    int col = s.param_idx(pid);
    for (int row = 0; row < m.n; ++row) {
      long long v = m.at(row, col);
      if (v != 0) out.set(s.parameters[row].id, out.coeff(s.parameters[row].id) + coeff * v);
    }
  }
  return out;
}

TauInvariant tau_invariant(const GeometricScenario& s, const std::string& param_id) {
  int col = s.param_idx(param_id);
  TauInvariant tau;
  for (int r = 0; r < s.datum.rank(); ++r) {
    const auto& m = s.continuation[r];
    bool neg_unit = true;
    for (int row = 0; row < m.n; ++row)
      if (m.at(row, col) != (row == col ? -1 : 0)) {
        neg_unit = false;
        break;
      }
    if (neg_unit)
      tau.dmodule_tau.insert(r);
    else
      tau.rep_tau.insert(r);
  }
  return tau;
}

bool is_generic(const GeometricScenario& s, const std::string& param_id) {
  if (!s.chi.regular)
    throw StateError(
        "genericity is undefined at singular lambda; transport flags through a "
        "translation pairing instead");
  return tau_invariant(s, param_id).rep_tau.empty();
}

}  // namespace orbitcc
