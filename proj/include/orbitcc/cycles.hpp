#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcc/scenario.hpp"

namespace orbitcc {

/// Integer combination of orbit-indexed conormal classes. Zero entries are
/// never stored, so equality is plain map equality.
class ConormalCycle {
 public:
  ConormalCycle() = default;
  explicit ConormalCycle(std::map<std::string, long long> coeffs);
  static ConormalCycle basis(const std::string& orbit_id);

  long long coeff(const std::string& orbit_id) const;
  void set(const std::string& orbit_id, long long value);
  const std::map<std::string, long long>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  ConormalCycle& operator+=(const ConormalCycle& rhs);
  ConormalCycle& operator-=(const ConormalCycle& rhs);
  ConormalCycle& operator*=(long long k);
  friend ConormalCycle operator+(ConormalCycle a, const ConormalCycle& b);
  friend ConormalCycle operator-(ConormalCycle a, const ConormalCycle& b);
  friend ConormalCycle operator*(long long k, ConormalCycle a);
  ConormalCycle operator-() const;
  bool operator==(const ConormalCycle& rhs) const { return c_ == rhs.c_; }

  std::string to_string() const;  // e.g. "[oOpen] + 2[o0]"

 private:
  std::map<std::string, long long> c_;
};

enum class OrbitClass { Vertical, Horizontal };

/// Vertical means the orbit is the dense member of its fiber class for the
/// given root.
OrbitClass classify(const GeometricScenario& s, const std::string& orbit_id,
                    int root);

/// Some simple root for which a non-open orbit is horizontal. Throws
/// InputError on the open orbit and IntegrityError if no witness exists.
int horizontal_witness(const GeometricScenario& s, const std::string& orbit_id);

/// Vertical orbits allowed as off-diagonal targets of a horizontal orbit:
/// those inside the downward closure of the union of fiber classes met by
/// the orbit's closure.
std::vector<int> vertical_support(const GeometricScenario& s, int horizontal_orbit,
                                  int root);

using NAssignment = std::map<std::pair<std::string, std::string>, long long>;

/// The simple-reflection action on the cycle lattice: -1 on vertical basis
/// classes, +1 on horizontal ones plus nonnegative coefficients on the
/// vertical orbits in their support. Coefficients may be left Unknown and
/// resolved later; acting requires a fully resolved operator.
class ReflectionOperator {
 public:
  static ReflectionOperator build(const GeometricScenario& s, int root,
                                  const std::optional<NAssignment>& assignment);

  int root() const { return root_; }
  bool fully_resolved() const;

  /// Image of the basis cycle of one orbit; throws StateError on Unknowns.
  ConormalCycle act_basis(int orbit) const;
  ConormalCycle act(const ConormalCycle& c) const;

  /// Resolved coefficient n(horizontal, vertical); nullopt when the slot is
  /// absent or still unknown.
  std::optional<long long> n_value(const std::string& horizontal,
                                   const std::string& vertical) const;
  const std::vector<std::pair<int, int>>& slots() const { return slots_; }

  /// Matrix in orbit-basis order; column j is the image of orbit j.
  std::vector<std::vector<long long>> matrix() const;

  /// Checks that the operator squares to the identity on all basis cycles.
  bool involutive() const;

 private:
  const GeometricScenario* s_ = nullptr;
  int root_ = -1;
  std::vector<OrbitClass> cls_;
  std::vector<std::pair<int, int>> slots_;  // (horizontal orbit, vertical orbit)
  std::map<std::pair<int, int>, std::optional<long long>> n_;
};

/// Action of a word in resolved simple operators, rightmost letter first.
ConormalCycle act_word(const std::vector<ReflectionOperator>& ops,
                       const std::vector<int>& word, const ConormalCycle& c);

}  // namespace orbitcc
