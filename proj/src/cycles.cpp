#include "orbitcc/cycles.hpp"

#include <algorithm>

#include "orbitcc/errors.hpp"

namespace orbitcc {

ConormalCycle::ConormalCycle(std::map<std::string, long long> coeffs) {
  for (auto& [k, v] : coeffs)
    if (v != 0) c_[k] = v;
}

ConormalCycle ConormalCycle::basis(const std::string& orbit_id) {
  ConormalCycle c;
  c.c_[orbit_id] = 1;
  return c;
}

long long ConormalCycle::coeff(const std::string& orbit_id) const {
  auto it = c_.find(orbit_id);
  return it == c_.end() ? 0 : it->second;
}

void ConormalCycle::set(const std::string& orbit_id, long long value) {
  if (value == 0)
    c_.erase(orbit_id);
  else
    c_[orbit_id] = value;
}

ConormalCycle& ConormalCycle::operator+=(const ConormalCycle& rhs) {
  for (const auto& [k, v] : rhs.c_) set(k, coeff(k) + v);
  return *this;
}

ConormalCycle& ConormalCycle::operator-=(const ConormalCycle& rhs) {
  for (const auto& [k, v] : rhs.c_) set(k, coeff(k) - v);
  return *this;
}

ConormalCycle& ConormalCycle::operator*=(long long k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [key, v] : c_) v *= k;
  return *this;
}

ConormalCycle operator+(ConormalCycle a, const ConormalCycle& b) { return a += b; }
ConormalCycle operator-(ConormalCycle a, const ConormalCycle& b) { return a -= b; }
ConormalCycle operator*(long long k, ConormalCycle a) { return a *= k; }

ConormalCycle ConormalCycle::operator-() const {
  ConormalCycle out = *this;
  for (auto& [k, v] : out.c_) v = -v;
  return out;
}

std::string ConormalCycle::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) out += v < 0 ? " - " : " + ";
    if (first && v < 0) out += "-";
    long long av = v < 0 ? -v : v;
    if (av != 1) out += std::to_string(av);
    out += "[" + k + "]";
    first = false;
  }
  return out;
}

OrbitClass classify(const GeometricScenario& s, const std::string& orbit_id,
                    int root) {
  int o = s.orbit_idx(orbit_id);
  const auto& cls = s.fiber_class_of(o, root);
  return cls.dense == orbit_id ? OrbitClass::Vertical : OrbitClass::Horizontal;
}

int horizontal_witness(const GeometricScenario& s, const std::string& orbit_id) {
  int o = s.orbit_idx(orbit_id);
  if (o == s.open_orbit())
    throw InputError("horizontal_witness is undefined on the open orbit");
  for (int r = 0; r < s.datum.rank(); ++r)
    if (classify(s, orbit_id, r) == OrbitClass::Horizontal) return r;
  throw IntegrityError("non-open orbit " + orbit_id +
                       " is dense in every fiber class; scenario rejected");
}

std::vector<int> vertical_support(const GeometricScenario& s, int horizontal_orbit,
                                  int root) {
  std::set<int> sat;
  for (int inner : s.closure_set(horizontal_orbit)) {
    const auto& cls = s.fiber_class_of(inner, root);
    for (const auto& m : cls.members) sat.insert(s.orbit_idx(m));
  }
  std::set<int> closed;
  for (int o : sat)
    for (int inner : s.closure_set(o)) closed.insert(inner);
  std::vector<int> out;
  for (int o : closed)
    if (classify(s, s.orbits[o].id, root) == OrbitClass::Vertical) out.push_back(o);
  return out;
}

ReflectionOperator ReflectionOperator::build(
    const GeometricScenario& s, int root,
    const std::optional<NAssignment>& assignment) {
  if (root < 0 || root >= s.datum.rank())
    throw InputError("root index out of range");
  ReflectionOperator op;
  op.s_ = &s;
  op.root_ = root;
  const int n = static_cast<int>(s.orbits.size());
  op.cls_.resize(n);
  for (int o = 0; o < n; ++o) op.cls_[o] = classify(s, s.orbits[o].id, root);
  for (int o = 0; o < n; ++o) {
    if (op.cls_[o] != OrbitClass::Horizontal) continue;
    for (int v : vertical_support(s, o, root)) {
      op.slots_.push_back({o, v});
      op.n_[{o, v}] = std::nullopt;
    }
  }
  if (assignment) {
    for (const auto& [key, value] : *assignment) {
      if (value < 0)
        throw InputError("reflection coefficient n(" + key.first + "," +
                         key.second + ") must be nonnegative");
      auto slot = std::make_pair(s.orbit_idx(key.first), s.orbit_idx(key.second));
      auto it = op.n_.find(slot);
      if (it == op.n_.end())
        throw InputError("assignment outside the allowed support: n(" + key.first +
                         "," + key.second + ")");
      it->second = value;
    }
    for (auto& [slot, value] : op.n_)
      if (!value) value = 0;  // a given assignment resolves the operator
  }
  return op;
}

bool ReflectionOperator::fully_resolved() const {
  return std::all_of(n_.begin(), n_.end(),
                     [](const auto& kv) { return kv.second.has_value(); });
}

ConormalCycle ReflectionOperator::act_basis(int orbit) const {
  ConormalCycle out;
  const auto& id = s_->orbits[orbit].id;
  if (cls_[orbit] == OrbitClass::Vertical) {
    out.set(id, -1);
    return out;
  }
  out.set(id, 1);
  for (const auto& [slot, value] : n_) {
    if (slot.first != orbit) continue;
    if (!value)
      throw StateError("reflection operator has unresolved coefficients");
    if (*value != 0) out.set(s_->orbits[slot.second].id, *value);
  }
  return out;
}

ConormalCycle ReflectionOperator::act(const ConormalCycle& c) const {
  ConormalCycle out;
  for (const auto& [orbit_id, coeff] : c.coefficients())
    out += coeff * act_basis(s_->orbit_idx(orbit_id));
  return out;
}

std::optional<long long> ReflectionOperator::n_value(
    const std::string& horizontal, const std::string& vertical) const {
  auto it = n_.find({s_->orbit_idx(horizontal), s_->orbit_idx(vertical)});
  if (it == n_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<long long>> ReflectionOperator::matrix() const {
  const int n = static_cast<int>(s_->orbits.size());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int col = 0; col < n; ++col) {
    auto image = act_basis(col);
    for (const auto& [orbit_id, coeff] : image.coefficients())
      m[s_->orbit_idx(orbit_id)][col] = coeff;
  }
  return m;
}

bool ReflectionOperator::involutive() const {
  for (int o = 0; o < static_cast<int>(s_->orbits.size()); ++o) {
    if (!(act(act_basis(o)) == ConormalCycle::basis(s_->orbits[o].id))) return false;
  }
  return true;
}

ConormalCycle act_word(const std::vector<ReflectionOperator>& ops,
                       const std::vector<int>& word, const ConormalCycle& c) {
  ConormalCycle out = c;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= static_cast<int>(ops.size()))
      throw InputError("word letter out of range");
    out = ops[*it].act(out);
  }
  return out;
}

}  // namespace orbitcc
