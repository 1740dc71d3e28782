#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcc/cycles.hpp"
#include "orbitcc/scenario.hpp"

namespace orbitcc {

enum class SolveStatus { Unique, Ambiguous, Infeasible };

std::string to_string(SolveStatus s);

/// The solved map parameter -> characteristic cycle. Entries are only
/// meaningful when status is Unique; `description` explains the Ambiguous
/// solution family or the Infeasible conflict.
struct CCTable {
  SolveStatus status = SolveStatus::Infeasible;
  std::map<std::string, ConormalCycle> entries;
  std::string description;
};

enum class FixReason { Support, Normalization, TauRule, SmoothClosure };

/// Introspectable result of constraint seeding, before any search:
/// per-parameter supports, values forced outright, and the symmetry
/// classes automorphisms impose on multiplicities.
struct ConstraintSet {
  long long bound = 4;
  /// Orbits allowed to carry a nonzero multiplicity, per parameter.
  std::map<std::string, std::vector<std::string>> support;
  /// (parameter, orbit) -> forced value with the rule that forced it.
  std::map<std::pair<std::string, std::string>, std::pair<long long, FixReason>>
      fixed;
  /// Groups of (parameter, orbit) cells forced equal by automorphisms
  /// fixing the parameter. Only classes of size > 1 are listed.
  std::vector<std::vector<std::pair<std::string, std::string>>> symmetry_classes;
  /// Unknown reflection coefficients, per root: (horizontal, vertical).
  std::vector<std::vector<std::pair<std::string, std::string>>> n_slots;
};

/// Emits the constraint system for a validated regular scenario. Throws
/// StateError at singular lambda.
ConstraintSet seed_constraints(const GeometricScenario& s, long long bound = 4);

struct SolveResult {
  CCTable table;
  /// Resolved reflection operators, one per simple root; only present when
  /// the table is Unique.
  std::vector<ReflectionOperator> operators;
  /// Resolved coefficients keyed by (root, horizontal, vertical).
  std::map<std::tuple<int, std::string, std::string>, long long> n_values;
};

/// Bounded exhaustive search over all unknown multiplicities and reflection
/// coefficients, after constraint propagation. Deterministic: canonical
/// variable order, ascending values.
SolveResult solve(const GeometricScenario& s, long long bound = 4);

/// Coefficient lookup; requires a Unique table.
long long chi_mic(const CCTable& t, const std::string& orbit_id,
                  const std::string& param_id);

struct AuditEntry {
  std::string param;
  int root;
  ConormalCycle lhs;  // CC of the continuation image, extended linearly
  ConormalCycle rhs;  // reflection operator applied to CC
};

struct AuditReport {
  std::vector<AuditEntry> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Verifies CC(s_a . D) = s_a . CC(D) for every parameter and simple root.
AuditReport equivariance_audit(const GeometricScenario& s, const CCTable& t,
                               const std::vector<ReflectionOperator>& ops);

}  // namespace orbitcc
