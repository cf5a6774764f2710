#include "qborel/poset.hpp"

#include <functional>
#include <numeric>

namespace qborel {

Poset Poset::build(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 0 || n > 62) throw MathError("poset size out of range");
  Poset q;
  q.n_ = n;
  q.down_.assign(n, 0);
  for (int i = 0; i < n; ++i) q.down_[i] = VarMask{1} << i;

  std::vector<VarMask> below(n, 0);  // strictly below
  for (auto [i, j] : relations) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw MathError("poset relation out of range");
    if (i >= j)
      throw MathError("natural labeling violated: need i < j in x_i < x_j");
    below[j] |= VarMask{1} << i;
  }
  // Transitive closure; indices only ever decrease along relations, so a
  // single ascending sweep suffices.
  for (int j = 0; j < n; ++j) {
    VarMask acc = below[j];
    for (int i = 0; i < j; ++i)
      if ((below[j] >> i) & 1) acc |= below[i];
    below[j] = acc;
    q.down_[j] |= acc;
  }
  // Covers = transitive reduction.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!((below[j] >> i) & 1)) continue;
      bool direct = true;
      for (int k = i + 1; k < j && direct; ++k)
        if (((below[j] >> k) & 1) && ((below[k] >> i) & 1)) direct = false;
      if (direct) q.covers_.emplace_back(i, j);
    }
  }
  return q;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return build(n, rel);
}

Poset Poset::y_poset(int t) {
  if (t < 1) throw MathError("y_poset needs t >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < t; ++i) rel.emplace_back(i, i + 1);
  rel.emplace_back(t - 1, t);      // x_t < y
  rel.emplace_back(t - 1, t + 1);  // x_t < z
  return build(t + 2, rel);
}

VarMask Poset::down_set(VarMask t) const {
  VarMask r = 0;
  for (int i = 0; i < n_; ++i)
    if ((t >> i) & 1) r |= down_[i];
  return r;
}

VarMask Poset::maximal_elements() const {
  VarMask covered = 0;
  for (auto [i, j] : covers_) {
    (void)j;
    covered |= VarMask{1} << i;
  }
  return ((n_ >= 64 ? ~VarMask{0} : (VarMask{1} << n_) - 1)) & ~covered;
}

bool Poset::is_order_ideal(VarMask a) const {
  for (int i = 0; i < n_; ++i)
    if ((a >> i) & 1)
      if ((down_[i] & ~a) != 0) return false;
  return true;
}

bool Poset::is_connected_order_ideal(VarMask a) const {
  if (!is_order_ideal(a))
    throw MathError("not an order ideal of the poset");
  if (a == 0) return false;
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : covers_)
    if (((a >> i) & 1) && ((a >> j) & 1)) parent[find(i)] = find(j);
  int root = -1;
  for (int i = 0; i < n_; ++i) {
    if (!((a >> i) & 1)) continue;
    if (root == -1)
      root = find(i);
    else if (find(i) != root)
      return false;
  }
  return true;
}

std::vector<VarMask> Poset::components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : covers_) parent[find(i)] = find(j);
  std::vector<VarMask> comp(n_, 0);
  for (int i = 0; i < n_; ++i) comp[find(i)] |= VarMask{1} << i;
  std::vector<VarMask> out;
  for (int i = 0; i < n_; ++i)
    if (comp[i] != 0) out.push_back(comp[i]);
  return out;
}

std::vector<VarMask> Poset::order_ideals() const {
  if (n_ > 20) throw LimitError("order-ideal enumeration limited to n <= 20");
  std::vector<VarMask> out;
  for (VarMask a = 0; a < (VarMask{1} << n_); ++a)
    if (is_order_ideal(a)) out.push_back(a);
  return out;
}

bool Poset::refines(const Poset& other) const {
  if (n_ != other.n_) return false;
  for (int j = 0; j < n_; ++j)
    if ((other.down_[j] & ~down_[j]) != 0) return false;
  return true;
}

bool Poset::is_chain() const {
  for (int j = 1; j < n_; ++j)
    if (!leq(j - 1, j)) return false;
  return true;
}

std::vector<Poset> all_naturally_labeled_posets(int n) {
  if (n > 6) throw LimitError("poset enumeration limited to n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
    // Check transitivity of the chosen relation set directly.
    std::vector<VarMask> below(n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((s >> k) & 1) below[pairs[k].second] |= VarMask{1} << pairs[k].first;
    bool transitive = true;
    for (int j = 0; j < n && transitive; ++j)
      for (int i = 0; i < j && transitive; ++i)
        if ((below[j] >> i) & 1)
          if ((below[i] & ~below[j]) != 0) transitive = false;
    if (!transitive) continue;
    std::vector<std::pair<int, int>> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((s >> k) & 1) rel.push_back(pairs[k]);
    out.push_back(Poset::build(n, rel));
  }
  return out;
}

}  // namespace qborel
