#include "orbitcc/scenario.hpp"

#include <algorithm>
#include <sstream>

#include "orbitcc/errors.hpp"

namespace orbitcc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  if (n != rhs.n) throw InputError("matrix size mismatch");
  IntMatrix out;
  out.n = n;
  out.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

int GeometricScenario::orbit_idx(const std::string& id) const {
  auto it = orbit_index.find(id);
  if (it == orbit_index.end()) throw InputError("unknown orbit id: " + id);
  return it->second;
}

int GeometricScenario::param_idx(const std::string& id) const {
  auto it = param_index.find(id);
  if (it == param_index.end()) throw InputError("unknown parameter id: " + id);
  return it->second;
}

int GeometricScenario::open_orbit() const {
  if (open_orbit_ < 0) throw StateError("scenario is not indexed");
  return open_orbit_;
}

int GeometricScenario::param_orbit(int p) const {
  return orbit_idx(parameters[p].orbit);
}

const std::vector<int>& GeometricScenario::closure_set(int orbit) const {
  if (!indexed()) throw StateError("scenario is not indexed");
  return closure_sets[orbit];
}

const FiberClass& GeometricScenario::fiber_class_of(int orbit, int root) const {
  if (!indexed()) throw StateError("scenario is not indexed");
  if (root < 0 || root >= datum.rank()) throw InputError("root index out of range");
  int cls = fiber_class_of_[root][orbit];
  if (cls < 0) throw StateError("orbit missing from fiber classes");
  return fibers[root][cls];
}

bool GeometricScenario::in_closure(int inner, int outer) const {
  const auto& cs = closure_set(outer);
  return std::binary_search(cs.begin(), cs.end(), inner);
}

std::optional<std::string> index_scenario(GeometricScenario& s) {
  s.orbit_index.clear();
  s.param_index.clear();
  s.closure_sets.clear();
  s.fiber_class_of_.clear();
  s.open_orbit_ = -1;

  for (int i = 0; i < static_cast<int>(s.orbits.size()); ++i) {
    if (s.orbit_index.count(s.orbits[i].id))
      return "duplicate orbit id: " + s.orbits[i].id;
    s.orbit_index[s.orbits[i].id] = i;
  }
  for (int i = 0; i < static_cast<int>(s.parameters.size()); ++i) {
    if (s.param_index.count(s.parameters[i].id))
      return "duplicate parameter id: " + s.parameters[i].id;
    s.param_index[s.parameters[i].id] = i;
  }

  const int n_orbits = static_cast<int>(s.orbits.size());
  std::vector<std::vector<int>> below(n_orbits);
  for (int i = 0; i < n_orbits; ++i)
    for (const auto& id : s.orbits[i].closure_below) {
      auto it = s.orbit_index.find(id);
      if (it == s.orbit_index.end())
        return "orbit " + s.orbits[i].id + " lists unknown closure member " + id;
      below[i].push_back(it->second);
    }

  // Transitive closure; dims strictly decrease along edges so this halts
  // even on bad inputs (cycles are reported by validate() via the grading).
  s.closure_sets.assign(n_orbits, {});
  for (int i = 0; i < n_orbits; ++i) {
    std::set<int> acc;
    std::vector<int> stack = {i};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (!acc.insert(cur).second) continue;
      for (int nxt : below[cur]) stack.push_back(nxt);
    }
    s.closure_sets[i].assign(acc.begin(), acc.end());
  }

  if (static_cast<int>(s.fibers.size()) != s.datum.rank())
    return "fibers must list one family of classes per simple root";
  s.fiber_class_of_.assign(s.datum.rank(), std::vector<int>(n_orbits, -1));
  for (int r = 0; r < s.datum.rank(); ++r)
    for (int c = 0; c < static_cast<int>(s.fibers[r].size()); ++c)
      for (const auto& id : s.fibers[r][c].members) {
        auto it = s.orbit_index.find(id);
        if (it == s.orbit_index.end())
          return "fiber class for root " + std::to_string(r) +
                 " lists unknown orbit " + id;
        if (s.fiber_class_of_[r][it->second] != -1)
          return "orbit " + id + " appears in two fiber classes for root " +
                 std::to_string(r);
        s.fiber_class_of_[r][it->second] = c;
      }

  int open = -1;
  for (int i = 0; i < n_orbits; ++i)
    if (s.orbits[i].dim == s.dim_X) {
      if (open >= 0) return "more than one orbit has dim = dim_X";
      open = i;
    }
  if (open < 0) return "no orbit has dim = dim_X";
  s.open_orbit_ = open;
  s.orbits[open].smooth_closure = true;  // its closure is all of X

  s.chi = analyze_character(s.datum, s.lambda);
  return std::nullopt;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& i : issues) os << "[" << i.code << "] " << i.message << "\n";
  return os.str();
}

namespace {

void check_continuation(const GeometricScenario& s, ValidationReport& rep) {
  const int np = static_cast<int>(s.parameters.size());
  if (static_cast<int>(s.continuation.size()) != s.datum.rank()) {
    rep.issues.push_back({"continuation.count",
                          "expected one continuation matrix per simple root"});
    return;
  }
  for (int r = 0; r < s.datum.rank(); ++r) {
    const auto& m = s.continuation[r];
    if (m.n != np) {
      rep.issues.push_back({"continuation.size",
                            "matrix for root " + std::to_string(r) +
                                " is not parameters x parameters"});
      return;
    }
  }
  auto id = IntMatrix::identity(np);
  for (int r = 0; r < s.datum.rank(); ++r) {
    if (!(s.continuation[r].mul(s.continuation[r]) == id))
      rep.issues.push_back({"continuation.involution",
                            "M^2 != I for root " + std::to_string(r)});
    for (int c = 0; c < np; ++c) {
      bool neg_unit = s.continuation[r].at(c, c) == -1;
      bool nonneg = true;
      for (int row = 0; row < np; ++row) {
        long long v = s.continuation[r].at(row, c);
        if (v < 0) nonneg = false;
        if (neg_unit && !(v == (row == c ? -1 : 0))) neg_unit = false;
      }
      if (!neg_unit && !nonneg)
        rep.issues.push_back(
            {"continuation.dichotomy",
             "column " + s.parameters[c].id + " of M_" + std::to_string(r) +
                 " is neither -e nor nonnegative"});
    }
  }
  for (int i = 0; i < s.datum.rank(); ++i)
    for (int j = i + 1; j < s.datum.rank(); ++j) {
      int m = s.datum.bond(i, j);
      IntMatrix lhs = IntMatrix::identity(np), rhs = IntMatrix::identity(np);
      for (int k = 0; k < m; ++k) {
        lhs = lhs.mul(s.continuation[k % 2 == 0 ? i : j]);
        rhs = rhs.mul(s.continuation[k % 2 == 0 ? j : i]);
      }
      if (!(lhs == rhs))
        rep.issues.push_back({"continuation.braid",
                              "braid relation fails for roots " +
                                  std::to_string(i) + "," + std::to_string(j)});
    }
}

void check_automorphisms(const GeometricScenario& s, ValidationReport& rep) {
  const int np = static_cast<int>(s.parameters.size());
  for (const auto& g : s.automorphisms) {
    std::string tag = g.name.empty() ? "automorphism" : "automorphism " + g.name;
    std::set<std::string> orbit_targets, param_targets;
    bool broken = false;
    for (const auto& o : s.orbits) {
      auto it = g.orbit_map.find(o.id);
      if (it == g.orbit_map.end() || !s.orbit_index.count(it->second)) {
        rep.issues.push_back({"automorphism.orbits", tag + " is not total on orbits"});
        broken = true;
        break;
      }
      orbit_targets.insert(it->second);
    }
    if (!broken && orbit_targets.size() != s.orbits.size()) {
      rep.issues.push_back({"automorphism.orbits", tag + " is not an orbit bijection"});
      broken = true;
    }
    for (const auto& p : s.parameters) {
      if (broken) break;
      auto it = g.parameter_map.find(p.id);
      if (it == g.parameter_map.end() || !s.param_index.count(it->second)) {
        rep.issues.push_back(
            {"automorphism.parameters", tag + " is not total on parameters"});
        broken = true;
        break;
      }
      param_targets.insert(it->second);
    }
    if (!broken && param_targets.size() != s.parameters.size()) {
      rep.issues.push_back(
          {"automorphism.parameters", tag + " is not a parameter bijection"});
      broken = true;
    }
    if (broken) continue;

    for (const auto& o : s.orbits) {
      const auto& img = s.orbits[s.orbit_idx(g.orbit_map.at(o.id))];
      if (img.dim != o.dim)
        rep.issues.push_back({"automorphism.dim", tag + " changes dim of " + o.id});
      std::set<std::string> below_img;
      for (const auto& b : o.closure_below) below_img.insert(g.orbit_map.at(b));
      std::set<std::string> img_below(img.closure_below.begin(),
                                      img.closure_below.end());
      if (below_img != img_below)
        rep.issues.push_back(
            {"automorphism.closure", tag + " breaks closure order at " + o.id});
    }
    for (const auto& p : s.parameters) {
      const auto& img = s.parameters[s.param_idx(g.parameter_map.at(p.id))];
      if (img.orbit != g.orbit_map.at(p.orbit))
        rep.issues.push_back(
            {"automorphism.support", tag + " moves " + p.id + " off its orbit image"});
    }
    for (int r = 0; r < s.datum.rank(); ++r) {
      for (int c = 0; c < static_cast<int>(s.fibers[r].size()); ++c) {
        const auto& cls = s.fibers[r][c];
        std::set<std::string> img_members;
        for (const auto& mid : cls.members) img_members.insert(g.orbit_map.at(mid));
        int target = s.fiber_class_of_[r][s.orbit_idx(g.orbit_map.at(cls.dense))];
        if (target < 0) continue;
        const auto& tcls = s.fibers[r][target];
        std::set<std::string> tmembers(tcls.members.begin(), tcls.members.end());
        if (img_members != tmembers || tcls.dense != g.orbit_map.at(cls.dense))
          rep.issues.push_back(
              {"automorphism.fibers",
               tag + " breaks fiber classes for root " + std::to_string(r)});
      }
      // P_g M = M P_g, with P_g the parameter permutation.
      IntMatrix pg = IntMatrix::identity(np);
      pg.a.assign(pg.a.size(), 0);
      for (int c = 0; c < np; ++c)
        pg.at(s.param_idx(g.parameter_map.at(s.parameters[c].id)), c) = 1;
      if (!(pg.mul(s.continuation[r]) == s.continuation[r].mul(pg)))
        rep.issues.push_back(
            {"automorphism.continuation",
             tag + " does not commute with M_" + std::to_string(r)});
    }
  }
}

}  // namespace

ValidationReport validate(GeometricScenario& s) {
  ValidationReport rep;
  if (auto err = index_scenario(s)) {
    rep.issues.push_back({"structure", *err});
    return rep;
  }

  for (const auto& o : s.orbits) {
    if (o.dim < 0 || o.dim > s.dim_X)
      rep.issues.push_back({"orbit.dim", "orbit " + o.id + " has dim outside [0, dim_X]"});
    for (const auto& b : o.closure_below) {
      const auto& inner = s.orbits[s.orbit_idx(b)];
      if (inner.dim >= o.dim)
        rep.issues.push_back({"closure.grading",
                              "closure order not graded: " + b + " under " + o.id});
    }
  }

  for (int r = 0; r < s.datum.rank(); ++r) {
    for (int i = 0; i < static_cast<int>(s.orbits.size()); ++i)
      if (s.fiber_class_of_[r][i] < 0)
        rep.issues.push_back({"fibers.partition",
                              "orbit " + s.orbits[i].id +
                                  " missing from fiber classes of root " +
                                  std::to_string(r)});
    for (const auto& cls : s.fibers[r]) {
      if (cls.members.empty()) {
        rep.issues.push_back({"fibers.empty", "empty fiber class"});
        continue;
      }
      if (std::find(cls.members.begin(), cls.members.end(), cls.dense) ==
          cls.members.end())
        rep.issues.push_back({"fibers.dense",
                              "dense member " + cls.dense + " not in its class"});
      int dense_dim = s.orbits[s.orbit_idx(cls.dense)].dim;
      for (const auto& mid : cls.members) {
        if (mid == cls.dense) continue;
        if (s.orbits[s.orbit_idx(mid)].dim >= dense_dim)
          rep.issues.push_back(
              {"fibers.dense",
               "dense member " + cls.dense + " is not the unique max-dim member"});
      }
    }
  }

  std::set<std::pair<std::string, std::string>> support_pairs;
  for (const auto& p : s.parameters) {
    if (!s.orbit_index.count(p.orbit)) {
      rep.issues.push_back({"parameter.orbit",
                            "parameter " + p.id + " sits on unknown orbit " + p.orbit});
      continue;
    }
    if (!support_pairs.insert({p.orbit, p.local_system}).second)
      rep.issues.push_back({"parameter.unique",
                            "duplicate (orbit, local system) pair at " + p.id});
  }

  check_continuation(s, rep);
  check_automorphisms(s, rep);

  for (const auto& a : s.a_parameters) {
    if (!s.orbit_index.count(a.orbit)) {
      rep.issues.push_back({"a_parameter.orbit",
                            "instance " + a.id + " names unknown orbit " + a.orbit});
      continue;
    }
    int codim = s.dim_X - s.orbits[s.orbit_idx(a.orbit)].dim;
    if (a.conormal_fiber_dim != codim)
      rep.issues.push_back({"a_parameter.fiber",
                            "instance " + a.id + " has conormal_fiber_dim " +
                                std::to_string(a.conormal_fiber_dim) +
                                ", expected " + std::to_string(codim)});
  }

  // Every non-open orbit must meet some fiber non-densely; otherwise the
  // scenario contradicts the dense-orbit dichotomy and is rejected.
  if (rep.ok()) {
    for (int i = 0; i < static_cast<int>(s.orbits.size()); ++i) {
      if (i == s.open_orbit_) continue;
      bool witness = false;
      for (int r = 0; r < s.datum.rank() && !witness; ++r)
        if (s.fiber_class_of(i, r).dense != s.orbits[i].id) witness = true;
      if (!witness)
        rep.issues.push_back({"orbits.witness",
                              "non-open orbit " + s.orbits[i].id +
                                  " is dense in every fiber class"});
    }
  }
  return rep;
}

}  // namespace orbitcc
