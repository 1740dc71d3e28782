#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitcc/infinitesimal.hpp"
#include "orbitcc/root_datum.hpp"

namespace orbitcc {

struct Orbit {
  std::string id;
  int dim = 0;
  std::vector<std::string> closure_below;  // ids strictly inside the closure
  bool smooth_closure = false;
};

/// Orbits meeting a common fiber of the projection along one simple root;
/// `dense` is the unique member whose intersection is open dense.
struct FiberClass {
  std::vector<std::string> members;
  std::string dense;
};

struct GeometricParameter {
  std::string id;
  std::string orbit;
  std::string local_system;  // "triv" designates the trivial one
  std::optional<std::string> pure_form;
  std::optional<bool> generic_expected;  // test fixture, not derived data
};

/// Orbit/parameter permutation preserving all scenario structure.
struct Automorphism {
  std::string name;
  std::map<std::string, std::string> orbit_map;
  std::map<std::string, std::string> parameter_map;
};

struct AParameterInstance {
  std::string id;
  std::string orbit;
  bool e_is_zero = false;
  int conormal_fiber_dim = 0;
};

/// Square integer matrix; column x holds the expansion of s.x in the basis.
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;  // row-major

  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const { return n == rhs.n && a == rhs.a; }
};

/// Finite model of a single K\X(lambda) geometry with its coherent
/// continuation data. Immutable after load + validate.
struct GeometricScenario {
  std::string name;
  RootDatum datum = RootDatum::builtin("A1");
  RatVec lambda;
  InfinitesimalCharacter chi;
  int dim_X = 0;
  std::vector<Orbit> orbits;
  std::vector<std::vector<FiberClass>> fibers;  // [simple root][class]
  std::vector<GeometricParameter> parameters;
  std::vector<IntMatrix> continuation;  // [simple root]
  std::vector<Automorphism> automorphisms;
  std::vector<AParameterInstance> a_parameters;

  // Derived lookup tables, built by index(); empty until then.
  std::map<std::string, int> orbit_index;
  std::map<std::string, int> param_index;
  std::vector<std::vector<int>> closure_sets;     // [orbit] transitive, incl. self
  std::vector<std::vector<int>> fiber_class_of_;  // [root][orbit] -> class idx
  int open_orbit_ = -1;

  bool indexed() const { return open_orbit_ >= 0; }
  int orbit_idx(const std::string& id) const;
  int param_idx(const std::string& id) const;
  int open_orbit() const;
  const Orbit& orbit(int i) const { return orbits[i]; }
  const GeometricParameter& parameter(int i) const { return parameters[i]; }
  int param_orbit(int p) const;
  /// Transitive closure of an orbit, itself included, as sorted indices.
  const std::vector<int>& closure_set(int orbit) const;
  const FiberClass& fiber_class_of(int orbit, int root) const;
  bool in_closure(int inner, int outer) const;
};

/// Rebuild the derived lookup tables. Returns an error message instead of
/// throwing, so that validate() can report referential problems.
std::optional<std::string> index_scenario(GeometricScenario& s);

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Checks every structural invariant of the scenario; violations become
/// report entries, never exceptions. An empty report means every other
/// module will accept the scenario.
ValidationReport validate(GeometricScenario& s);

/// Rank-one scenarios derived from the multiplicative-group action on the
/// projective line; they double as the independent oracle for the solver.
enum class RankOneKind { Torus, Normalizer };

struct GeneratedScenario {
  GeometricScenario scenario;
  /// Oracle characteristic-cycle table: parameter id -> (orbit id -> mult).
  std::map<std::string, std::map<std::string, long long>> oracle_cc;
  /// Oracle reflection coefficients: (horizontal, vertical) -> n.
  std::map<std::pair<std::string, std::string>, long long> oracle_n;
};

GeneratedScenario generate_rank_one(RankOneKind kind);

/// Direct product of two scenarios (orbits, fibers, parameters and
/// continuation matrices all factorwise). Used to curate product files.
GeometricScenario product(const GeometricScenario& a, const GeometricScenario& b);

std::string product_id(const std::string& a, const std::string& b);

}  // namespace orbitcc
