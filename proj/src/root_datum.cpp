#include "orbitcc/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbitcc/errors.hpp"

namespace orbitcc {

namespace {

long long height(const std::vector<long long>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

bool same_sign_combination(const std::vector<long long>& v) {
  bool nonneg = std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
  bool nonpos = std::all_of(v.begin(), v.end(), [](long long x) { return x <= 0; });
  return nonneg || nonpos;
}

}  // namespace

RootDatum RootDatum::from_cartan(std::vector<std::vector<long long>> cartan,
                                 std::string name) {
  RootDatum d;
  d.name_ = std::move(name);
  d.rank_ = static_cast<int>(cartan.size());
  if (d.rank_ == 0) throw InputError("root datum must have positive rank");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != d.rank_)
      throw InputError("cartan matrix must be square");
  for (int i = 0; i < d.rank_; ++i) {
    if (cartan[i][i] != 2) throw InputError("cartan diagonal must be 2");
    for (int j = 0; j < d.rank_; ++j)
      if (i != j && cartan[i][j] > 0)
        throw InputError("off-diagonal cartan entries must be <= 0");
  }
  d.cartan_ = std::move(cartan);

  // Close the simple (root, coroot) pairs under simple reflections.
  // s_i on root coords a: a_i -= sum_j cartan(i, j) a_j.
  // s_i on coroot coords b: b_i -= sum_k cartan(k, i) b_k.
  std::vector<std::vector<long long>> roots, coroots;
  std::map<std::vector<long long>, int> seen;
  for (int s = 0; s < d.rank_; ++s) {
    std::vector<long long> a(d.rank_, 0), b(d.rank_, 0);
    a[s] = 1;
    b[s] = 1;
    seen[a] = static_cast<int>(roots.size());
    roots.push_back(a);
    coroots.push_back(b);
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    if (roots.size() > 1000)
      throw InputError("cartan matrix generates too many roots (not finite type?)");
    for (int i = 0; i < d.rank_; ++i) {
      auto a = roots[head];
      auto b = coroots[head];
      long long pa = 0, pb = 0;
      for (int j = 0; j < d.rank_; ++j) pa += d.cartan_[i][j] * a[j];
      for (int k = 0; k < d.rank_; ++k) pb += d.cartan_[k][i] * b[k];
      a[i] -= pa;
      b[i] -= pb;
      if (!same_sign_combination(a))
        throw InputError("reflection left the root lattice cone; bad cartan matrix");
      if (!seen.count(a)) {
        seen[a] = static_cast<int>(roots.size());
        roots.push_back(a);
        coroots.push_back(b);
      }
    }
  }

  // Canonical order: simples in index order, the remaining positives by
  // (height, lex), then matching negatives. Height 1 means simple here.
  std::vector<int> pos;
  for (int i = 0; i < static_cast<int>(roots.size()); ++i)
    if (height(roots[i]) > 0) pos.push_back(i);
  auto simple_slot = [&](int idx) -> int {
    const auto& v = roots[idx];
    if (height(v) != 1) return -1;
    for (int j = 0; j < d.rank_; ++j)
      if (v[j] == 1) return j;
    return -1;
  };
  std::sort(pos.begin(), pos.end(), [&](int x, int y) {
    int sx = simple_slot(x), sy = simple_slot(y);
    if ((sx >= 0) != (sy >= 0)) return sx >= 0;
    if (sx >= 0) return sx < sy;
    long long hx = height(roots[x]), hy = height(roots[y]);
    if (hx != hy) return hx < hy;
    return roots[x] < roots[y];
  });
  d.num_positive_ = static_cast<int>(pos.size());
  for (int i : pos) {
    d.roots_.push_back(roots[i]);
    d.coroots_.push_back(coroots[i]);
  }
  for (int i : pos) {
    auto neg = roots[i];
    auto negc = coroots[i];
    for (auto& x : neg) x = -x;
    for (auto& x : negc) x = -x;
    d.roots_.push_back(neg);
    d.coroots_.push_back(negc);
  }

  d.reflect_.assign(d.rank_, std::vector<int>(d.roots_.size(), -1));
  for (int s = 0; s < d.rank_; ++s)
    for (int r = 0; r < static_cast<int>(d.roots_.size()); ++r) {
      auto a = d.roots_[r];
      long long pa = 0;
      for (int j = 0; j < d.rank_; ++j) pa += d.cartan_[s][j] * a[j];
      a[s] -= pa;
      int idx = d.root_index(a);
      if (idx < 0) throw InputError("root set not reflection-stable");
      d.reflect_[s][r] = idx;
    }
  return d;
}

RootDatum RootDatum::builtin(const std::string& name) {
  if (name == "A1") return from_cartan({{2}}, name);
  if (name == "A1xA1") return from_cartan({{2, 0}, {0, 2}}, name);
  if (name == "A2") return from_cartan({{2, -1}, {-1, 2}}, name);
  if (name == "B2") return from_cartan({{2, -1}, {-2, 2}}, name);
  if (name == "C2") return from_cartan({{2, -2}, {-1, 2}}, name);
  throw InputError("unknown builtin root system: " + name);
}

const std::vector<std::string>& RootDatum::builtin_names() {
  static const std::vector<std::string> names = {"A1", "A1xA1", "A2", "B2", "C2"};
  return names;
}

const std::vector<long long>& RootDatum::root(int i) const {
  if (i < 0 || i >= num_roots()) throw InputError("root index out of range");
  return roots_[i];
}

const std::vector<long long>& RootDatum::coroot(int i) const {
  if (i < 0 || i >= num_roots()) throw InputError("coroot index out of range");
  return coroots_[i];
}

int RootDatum::negative_of(int i) const {
  if (i < 0 || i >= num_roots()) throw InputError("root index out of range");
  return i < num_positive_ ? i + num_positive_ : i - num_positive_;
}

int RootDatum::root_index(const std::vector<long long>& coords) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots_[i] == coords) return i;
  return -1;
}

long long RootDatum::pair_root_coroot(int root_i, int coroot_j) const {
  const auto& a = root(root_i);
  const auto& b = coroot(coroot_j);
  long long total = 0;
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) total += b[k] * cartan_[k][j] * a[j];
  return total;
}

Rat RootDatum::pairing(int root_i, const RatVec& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_)
    throw InputError("lambda has wrong dimension for this root datum");
  const auto& a = root(root_i);
  Rat total(0);
  for (int j = 0; j < rank_; ++j) total += Rat(a[j]) * lambda[j];
  return total;
}

int RootDatum::reflect_root(int simple, int root_i) const {
  if (simple < 0 || simple >= rank_) throw InputError("simple index out of range");
  if (root_i < 0 || root_i >= num_roots()) throw InputError("root index out of range");
  return reflect_[simple][root_i];
}

RatVec RootDatum::reflect_weight(int simple, const RatVec& lambda) const {
  if (simple < 0 || simple >= rank_) throw InputError("simple index out of range");
  if (static_cast<int>(lambda.size()) != rank_)
    throw InputError("lambda has wrong dimension for this root datum");
  // s_i(lambda) = lambda - <alpha_i, lambda> alpha_i^vee, and row i of the
  // cartan matrix holds alpha_i^vee in fundamental-coweight coordinates.
  RatVec out = lambda;
  Rat c = lambda[simple];
  for (int j = 0; j < rank_; ++j) out[j] -= c * Rat(cartan_[simple][j]);
  return out;
}

int RootDatum::bond(int i, int j) const {
  if (i == j) return 1;
  long long p = cartan_[i][j] * cartan_[j][i];
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InputError("cartan product out of finite-type range");
  }
}

}  // namespace orbitcc
