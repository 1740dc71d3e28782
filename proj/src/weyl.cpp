#include "orbitcc/weyl.hpp"

#include <numeric>

#include "orbitcc/errors.hpp"

namespace orbitcc {

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
  return q;
}

}  // namespace

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
  WeylElement out = a;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

std::vector<int> root_permutation(const RootDatum& d, const WeylElement& w) {
  auto perm = identity_perm(d.num_roots());
  // Rightmost letter acts first.
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    for (auto& r : perm) r = d.reflect_root(*it, r);
  return perm;
}

int weyl_length(const RootDatum& d, const WeylElement& w) {
  auto perm = root_permutation(d, w);
  int len = 0;
  for (int i = 0; i < d.num_positive(); ++i)
    if (!d.is_positive(perm[i])) ++len;
  return len;
}

bool weyl_equal(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
  return root_permutation(d, a) == root_permutation(d, b);
}

WeylElement canonicalize(const RootDatum& d, const WeylElement& w) {
  auto perm = root_permutation(d, w);
  WeylElement out;
  auto id = identity_perm(d.num_roots());
  while (perm != id) {
    auto inv = invert(perm);
    int descent = -1;
    for (int i = 0; i < d.rank(); ++i) {
      if (!d.is_positive(inv[i])) {  // w^{-1}(alpha_i) < 0, so l(s_i w) < l(w)
        descent = i;
        break;
      }
    }
    if (descent < 0) throw StateError("no descent found for nontrivial element");
    out.word.push_back(descent);
    for (auto& r : perm) r = d.reflect_root(descent, r);  // perm := s_i . perm
  }
  return out;
}

RatVec weyl_act(const RootDatum& d, const WeylElement& w, const RatVec& lambda) {
  if (static_cast<int>(lambda.size()) != d.rank())
    throw InputError("lambda has wrong dimension for this root datum");
  RatVec out = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    if (*it < 0 || *it >= d.rank()) throw InputError("word letter out of range");
    out = d.reflect_weight(*it, out);
  }
  return out;
}

}  // namespace orbitcc
