#pragma once

#include <string>
#include <vector>

#include "orbitcc/rational.hpp"

namespace orbitcc {

/// Based root system generated from a Cartan matrix.
///
/// Conventions, fixed once for the whole engine:
///  - roots are stored as integer vectors in the simple-root basis,
///    coroots in the simple-coroot basis;
///  - cartan(i, j) = <alpha_j, alpha_i^vee>;
///  - weights (the lambda vectors fed to pairing/reflections) live in the
///    basis of fundamental coweights, so <alpha, lambda> is the plain dot
///    product of alpha's simple-root coordinates with lambda, and the
///    cocharacter lattice is exactly the integer vectors.
///
/// Roots are indexed with all positive roots first (simples are 0..rank-1),
/// negatives after, matched by negative_of().
class RootDatum {
 public:
  static RootDatum from_cartan(std::vector<std::vector<long long>> cartan,
                               std::string name = "custom");
  static RootDatum builtin(const std::string& name);  // A1, A1xA1, A2, B2, C2
  static const std::vector<std::string>& builtin_names();

  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const std::string& name() const { return name_; }

  const std::vector<long long>& root(int i) const;
  const std::vector<long long>& coroot(int i) const;
  bool is_positive(int i) const { return i < num_positive_; }
  int negative_of(int i) const;
  /// Index of the root equal to -root(i)... i.e. negation as an index map.
  int root_index(const std::vector<long long>& coords) const;  // -1 if absent

  long long cartan(int i, int j) const { return cartan_[i][j]; }
  long long pair_root_coroot(int root_i, int coroot_j) const;

  /// <alpha_i, lambda> with lambda in fundamental-coweight coordinates.
  Rat pairing(int root_i, const RatVec& lambda) const;

  /// Index of s_simple(root_i).
  int reflect_root(int simple, int root_i) const;
  /// s_simple acting on a weight in fundamental-coweight coordinates.
  RatVec reflect_weight(int simple, const RatVec& lambda) const;

  /// Coxeter bond m(i, j) between two simple reflections (2, 3, 4 or 6).
  int bond(int i, int j) const;

  bool operator==(const RootDatum& other) const { return cartan_ == other.cartan_; }

 private:
  std::string name_;
  int rank_ = 0;
  int num_positive_ = 0;
  std::vector<std::vector<long long>> cartan_;
  std::vector<std::vector<long long>> roots_;
  std::vector<std::vector<long long>> coroots_;
  std::vector<std::vector<int>> reflect_;  // [simple][root index]
};

}  // namespace orbitcc
