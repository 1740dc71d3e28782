#include "orbitcc/ccsolver.hpp"

#include <algorithm>
#include <sstream>

#include "orbitcc/errors.hpp"
#include "orbitcc/kgroup.hpp"

namespace orbitcc {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Ambiguous: return "ambiguous";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

struct Interval {
  long long lo, hi;
  bool fixed() const { return lo == hi; }
};

// coef * x (linear, b < 0) or coef * x * y (bilinear).
struct Term {
  long long coef;
  int a;
  int b;
};

struct Equation {
  std::vector<Term> terms;
  std::string context;
};

struct Model {
  const GeometricScenario* s = nullptr;
  long long bound = 4;
  std::vector<std::string> var_name;
  std::vector<int> parent;                     // union-find
  std::map<std::pair<int, int>, int> chi_var;  // (param, orbit) -> var
  std::vector<std::map<std::pair<int, int>, int>> n_var;  // [root][(h,v)]
  std::vector<Equation> equations;
  std::vector<Interval> init;  // per representative; index by var, reps only used

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);  // keep the smallest index as representative
    parent[y] = x;
    init[x].lo = std::max(init[x].lo, init[y].lo);
    init[x].hi = std::min(init[x].hi, init[y].hi);
  }
  int new_var(std::string name) {
    var_name.push_back(std::move(name));
    parent.push_back(static_cast<int>(parent.size()));
    init.push_back({0, bound});
    return static_cast<int>(parent.size()) - 1;
  }
  bool fix(int v, long long value) {
    int r = find(v);
    if (value < init[r].lo || value > init[r].hi) return false;
    init[r].lo = init[r].hi = value;
    return true;
  }
};

std::string chi_name(const GeometricScenario& s, int p, int o) {
  return "chi[" + s.parameters[p].id + "][" + s.orbits[o].id + "]";
}

std::string n_name(const GeometricScenario& s, int root, int h, int v) {
  return "n" + std::to_string(root) + "(" + s.orbits[h].id + "," + s.orbits[v].id +
         ")";
}

// Shared seeding used by both seed_constraints() and solve(). Fills the
// model and reports forced values; returns an error string on an immediate
// seeding conflict.
std::optional<std::string> build_model(const GeometricScenario& s, long long bound,
                                       Model& m, ConstraintSet* out) {
  if (bound < 1) throw InputError("solver bound must be >= 1");
  if (!s.indexed()) throw StateError("scenario is not indexed; validate it first");
  if (static_cast<int>(s.continuation.size()) != s.datum.rank() ||
      std::any_of(s.continuation.begin(), s.continuation.end(),
                  [&](const IntMatrix& m) {
                    return m.n != static_cast<int>(s.parameters.size());
                  }))
    throw StateError("continuation matrices malformed; validate the scenario first");
  if (!s.chi.regular)
    throw StateError(
        "constraints are only seeded at regular lambda; use translation "
        "transport for singular scenarios");

  m.s = &s;
  m.bound = bound;
  const int np = static_cast<int>(s.parameters.size());
  const int rank = s.datum.rank();

  std::vector<TauInvariant> tau(np);
  for (int p = 0; p < np; ++p) tau[p] = tau_invariant(s, s.parameters[p].id);
  std::vector<std::vector<OrbitClass>> cls(rank);
  for (int r = 0; r < rank; ++r) {
    cls[r].resize(s.orbits.size());
    for (int o = 0; o < static_cast<int>(s.orbits.size()); ++o)
      cls[r][o] = classify(s, s.orbits[o].id, r);
  }

  auto record_fix = [&](int p, int o, long long v, FixReason why) -> bool {
    if (out) {
      auto key = std::make_pair(s.parameters[p].id, s.orbits[o].id);
      auto it = out->fixed.find(key);
      if (it == out->fixed.end()) out->fixed[key] = {v, why};
    }
    return m.fix(m.chi_var.at({p, o}), v);
  };

  for (int p = 0; p < np; ++p) {
    int own = s.param_orbit(p);
    for (int o : s.closure_set(own)) {
      int v = m.new_var(chi_name(s, p, o));
      m.chi_var[{p, o}] = v;
      if (out) out->support[s.parameters[p].id].push_back(s.orbits[o].id);
    }
    if (!record_fix(p, own, 1, FixReason::Normalization))
      return "cannot normalize " + chi_name(s, p, own) + " to 1";
    bool smooth = s.orbits[own].smooth_closure &&
                  s.parameters[p].local_system == "triv";
    for (int o : s.closure_set(own)) {
      if (o == own) continue;
      bool forced_zero = smooth;
      FixReason why = FixReason::SmoothClosure;
      if (!forced_zero) {
        for (int r : tau[p].dmodule_tau)
          if (cls[r][o] == OrbitClass::Horizontal) {
            forced_zero = true;
            why = FixReason::TauRule;
            break;
          }
      }
      if (forced_zero && !record_fix(p, o, 0, why))
        return "conflicting zero constraint on " + chi_name(s, p, o);
    }
  }

  // Symmetry: cycles of parameters fixed by an automorphism are invariant
  // under its orbit permutation.
  for (const auto& g : s.automorphisms) {
    for (int p = 0; p < np; ++p) {
      if (g.parameter_map.at(s.parameters[p].id) != s.parameters[p].id) continue;
      for (int o : s.closure_set(s.param_orbit(p))) {
        int img = s.orbit_idx(g.orbit_map.at(s.orbits[o].id));
        if (img != o) m.unite(m.chi_var.at({p, o}), m.chi_var.at({p, img}));
      }
    }
  }
  for (const auto& iv : m.init)
    if (iv.lo > iv.hi) return "symmetry constraints conflict with forced values";

  m.n_var.resize(rank);
  if (out) out->n_slots.resize(rank);
  for (int r = 0; r < rank; ++r) {
    for (int h = 0; h < static_cast<int>(s.orbits.size()); ++h) {
      if (cls[r][h] != OrbitClass::Horizontal) continue;
      for (int v : vertical_support(s, h, r)) {
        m.n_var[r][{h, v}] = m.new_var(n_name(s, r, h, v));
        if (out) out->n_slots[r].push_back({s.orbits[h].id, s.orbits[v].id});
      }
    }
  }

  // Equivariance: CC(M_a . xi) = T_a(CC(xi)) coefficientwise.
  for (int p = 0; p < np; ++p)
    for (int r = 0; r < rank; ++r)
      for (int o = 0; o < static_cast<int>(s.orbits.size()); ++o) {
        Equation eq;
        eq.context = "(" + s.parameters[p].id + ", root " + std::to_string(r) +
                     ", orbit " + s.orbits[o].id + ")";
        for (int q = 0; q < np; ++q) {
          long long coef = s.continuation[r].at(q, p);
          if (coef == 0) continue;
          auto it = m.chi_var.find({q, o});
          if (it != m.chi_var.end()) eq.terms.push_back({coef, it->second, -1});
        }
        long long sign = cls[r][o] == OrbitClass::Vertical ? -1 : 1;
        if (auto it = m.chi_var.find({p, o}); it != m.chi_var.end())
          eq.terms.push_back({-sign, it->second, -1});
        for (const auto& [slot, nv] : m.n_var[r]) {
          if (slot.second != o) continue;
          auto it = m.chi_var.find({p, slot.first});
          if (it != m.chi_var.end()) eq.terms.push_back({-1, nv, it->second});
        }
        if (!eq.terms.empty()) m.equations.push_back(std::move(eq));
      }

  if (out) {
    // Publish only nontrivial symmetry classes, in canonical order.
    std::map<int, std::vector<std::pair<std::string, std::string>>> classes;
    for (const auto& [key, v] : m.chi_var)
      classes[m.find(v)].push_back(
          {s.parameters[key.first].id, s.orbits[key.second].id});
    for (auto& [rep, members] : classes)
      if (members.size() > 1) out->symmetry_classes.push_back(members);
  }
  return std::nullopt;
}

struct Searcher {
  Model& m;
  std::vector<int> reps;               // representative variables, canonical order
  std::map<int, int> rep_pos;          // representative -> position in reps
  long long nodes = 0;
  static constexpr long long kNodeBudget = 4000000;
  static constexpr int kMaxSolutions = 64;
  std::vector<std::vector<long long>> solutions;  // values per representative
  std::string conflict;

  explicit Searcher(Model& model) : m(model) {
    for (int v = 0; v < static_cast<int>(m.parent.size()); ++v)
      if (m.find(v) == v) {
        rep_pos[v] = static_cast<int>(reps.size());
        reps.push_back(v);
      }
  }

  Interval& dom(std::vector<Interval>& state, int var) {
    return state[rep_pos.at(m.find(var))];
  }

  // Interval check plus single-unknown solving; false means contradiction.
  bool propagate(std::vector<Interval>& state, bool root_level) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& eq : m.equations) {
        long long lo = 0, hi = 0;
        int unfixed = -1;
        bool multiple = false;
        for (const auto& t : eq.terms) {
          Interval a = dom(state, t.a);
          Interval b = t.b >= 0 ? dom(state, t.b) : Interval{1, 1};
          long long tlo = t.coef * a.lo * b.lo, thi = t.coef * a.hi * b.hi;
          if (t.coef < 0) std::swap(tlo, thi);
          lo += tlo;
          hi += thi;
          for (int var : {t.a, t.b}) {
            if (var < 0) continue;
            if (!dom(state, var).fixed()) {
              int r = m.find(var);
              if (unfixed == -1)
                unfixed = r;
              else if (unfixed != r)
                multiple = true;
            }
          }
        }
        if (lo > 0 || hi < 0) {
          if (root_level && conflict.empty())
            conflict = "equivariance conflict at " + eq.context;
          return false;
        }
        if (unfixed >= 0 && !multiple) {
          long long k = 0, rest = 0;
          for (const auto& t : eq.terms) {
            long long ca = dom(state, t.a).fixed() ? dom(state, t.a).lo : -1;
            long long cb = t.b >= 0 ? (dom(state, t.b).fixed() ? dom(state, t.b).lo : -1)
                                    : 1;
            bool a_un = m.find(t.a) == unfixed && ca < 0;
            bool b_un = t.b >= 0 && m.find(t.b) == unfixed && cb < 0;
            if (a_un && b_un) {
              // n * chi with both cells in the same symmetry class cannot
              // occur: n and chi variables are never united.
              return false;
            } else if (a_un) {
              k += t.coef * cb;
            } else if (b_un) {
              k += t.coef * ca;
            } else {
              rest += t.coef * ca * cb;
            }
          }
          Interval& d = state[rep_pos.at(unfixed)];
          if (k == 0) {
            if (rest != 0) {
              if (root_level && conflict.empty())
                conflict = "equivariance conflict at " + eq.context;
              return false;
            }
            continue;
          }
          if (rest % k != 0 || -rest / k < d.lo || -rest / k > d.hi) {
            if (root_level && conflict.empty())
              conflict = "equivariance conflict at " + eq.context;
            return false;
          }
          if (!d.fixed()) {
            d.lo = d.hi = -rest / k;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool exact_check(std::vector<Interval>& state) {
    for (const auto& eq : m.equations) {
      long long total = 0;
      for (const auto& t : eq.terms) {
        long long v = t.coef * dom(state, t.a).lo;
        if (t.b >= 0) v *= dom(state, t.b).lo;
        total += v;
      }
      if (total != 0) return false;
    }
    return true;
  }

  void dfs(std::vector<Interval> state, bool root_level) {
    if (static_cast<int>(solutions.size()) >= kMaxSolutions) return;
    if (++nodes > kNodeBudget)
      throw StateError("solver search budget exceeded; raise the bound carefully");
    if (!propagate(state, root_level)) return;
    int branch = -1;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
      if (!state[i].fixed()) {
        branch = i;
        break;
      }
    if (branch < 0) {
      if (exact_check(state)) {
        std::vector<long long> sol;
        sol.reserve(reps.size());
        for (const auto& iv : state) sol.push_back(iv.lo);
        solutions.push_back(std::move(sol));
      }
      return;
    }
    Interval d = state[branch];
    for (long long v = d.lo; v <= d.hi; ++v) {
      auto next = state;
      next[branch] = {v, v};
      dfs(std::move(next), false);
      if (static_cast<int>(solutions.size()) >= kMaxSolutions) return;
    }
  }
};

std::string describe_family(const Model& m, const Searcher& sr) {
  std::ostringstream os;
  std::vector<int> varying;
  for (int i = 0; i < static_cast<int>(sr.reps.size()); ++i) {
    for (const auto& sol : sr.solutions)
      if (sol[i] != sr.solutions.front()[i]) {
        varying.push_back(i);
        break;
      }
  }
  os << (static_cast<int>(sr.solutions.size()) >= Searcher::kMaxSolutions
             ? "at least "
             : "")
     << sr.solutions.size() << " assignments within the bound; free directions: ";
  for (std::size_t k = 0; k < varying.size(); ++k) {
    if (k) os << ", ";
    os << m.var_name[sr.reps[varying[k]]];
  }
  if (!varying.empty() && varying.size() <= 6 && sr.solutions.size() <= 20) {
    os << "; solutions ";
    for (std::size_t j = 0; j < sr.solutions.size(); ++j) {
      if (j) os << " ";
      os << "(";
      for (std::size_t k = 0; k < varying.size(); ++k) {
        if (k) os << ",";
        os << sr.solutions[j][varying[k]];
      }
      os << ")";
    }
  }
  return os.str();
}

}  // namespace

ConstraintSet seed_constraints(const GeometricScenario& s, long long bound) {
  ConstraintSet out;
  out.bound = bound;
  Model m;
  if (auto err = build_model(s, bound, m, &out))
    throw IntegrityError("constraint seeding failed: " + *err);
  return out;
}

SolveResult solve(const GeometricScenario& s, long long bound) {
  SolveResult result;
  Model m;
  if (auto err = build_model(s, bound, m, nullptr)) {
    result.table.status = SolveStatus::Infeasible;
    result.table.description = *err;
    return result;
  }

  Searcher sr(m);
  std::vector<Interval> state;
  state.reserve(sr.reps.size());
  for (int rep : sr.reps) state.push_back(m.init[rep]);
  sr.dfs(std::move(state), true);

  if (sr.solutions.empty()) {
    result.table.status = SolveStatus::Infeasible;
    result.table.description = sr.conflict.empty()
                                   ? "no assignment within the bound satisfies "
                                     "the constraints"
                                   : sr.conflict;
    return result;
  }
  if (sr.solutions.size() > 1) {
    result.table.status = SolveStatus::Ambiguous;
    result.table.description = describe_family(m, sr);
    return result;
  }

  const auto& sol = sr.solutions.front();
  auto value_of = [&](int var) { return sol[sr.rep_pos.at(m.find(var))]; };

  result.table.status = SolveStatus::Unique;
  for (int p = 0; p < static_cast<int>(s.parameters.size()); ++p) {
    ConormalCycle cycle;
    for (int o : s.closure_set(s.param_orbit(p)))
      cycle.set(s.orbits[o].id, value_of(m.chi_var.at({p, o})));
    result.table.entries[s.parameters[p].id] = std::move(cycle);
  }
  for (int r = 0; r < s.datum.rank(); ++r) {
    NAssignment assign;
    for (const auto& [slot, var] : m.n_var[r]) {
      long long v = value_of(var);
      assign[{s.orbits[slot.first].id, s.orbits[slot.second].id}] = v;
      result.n_values[{r, s.orbits[slot.first].id, s.orbits[slot.second].id}] = v;
    }
    result.operators.push_back(ReflectionOperator::build(s, r, assign));
  }
  return result;
}

long long chi_mic(const CCTable& t, const std::string& orbit_id,
                  const std::string& param_id) {
  if (t.status != SolveStatus::Unique)
    throw StateError("chi_mic requires a unique table (status: " +
                     to_string(t.status) + ")");
  auto it = t.entries.find(param_id);
  if (it == t.entries.end()) throw InputError("unknown parameter id: " + param_id);
  return it->second.coeff(orbit_id);
}

AuditReport equivariance_audit(const GeometricScenario& s, const CCTable& t,
                               const std::vector<ReflectionOperator>& ops) {
  if (t.status != SolveStatus::Unique)
    throw StateError("equivariance audit requires a unique table");
  if (static_cast<int>(ops.size()) != s.datum.rank())
    throw InputError("expected one resolved operator per simple root");
  AuditReport rep;
  for (int p = 0; p < static_cast<int>(s.parameters.size()); ++p) {
    const auto& pid = s.parameters[p].id;
    for (int r = 0; r < s.datum.rank(); ++r) {
      ConormalCycle lhs;
      for (int q = 0; q < static_cast<int>(s.parameters.size()); ++q) {
        long long coef = s.continuation[r].at(q, p);
        if (coef != 0) lhs += coef * t.entries.at(s.parameters[q].id);
      }
      ConormalCycle rhs = ops[r].act(t.entries.at(pid));
      if (!(lhs == rhs)) rep.mismatches.push_back({pid, r, lhs, rhs});
    }
  }
  return rep;
}

}  // namespace orbitcc
