#pragma once

#include <utility>
#include <vector>

#include "qborel/ideal.hpp"

namespace qborel {

/// A naturally labeled poset on variables x_0 < ... < x_{n-1}: x_i <_Q x_j is
/// only allowed when i < j.  Stored as the full reachability relation plus
/// its transitive reduction (the cover relations).
class Poset {
public:
  Poset() = default;

  // relations may be any set of pairs (i, j) meaning x_i <_Q x_j; the
  // transitive closure is taken.  Rejects i >= j (natural labeling).
  static Poset build(int n, const std::vector<std::pair<int, int>>& relations);
  static Poset antichain(int n) { return build(n, {}); }
  static Poset chain(int n);
  // x_0 < ... < x_{t-1} < y and x_{t-1} < z, on t + 2 variables.
  static Poset y_poset(int t);

  int size() const { return n_; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool leq(int i, int j) const { return (down_[j] >> i) & 1; }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Mask of { j : x_j <=_Q x_i } (the principal down-set, including i).
  VarMask down_mask(int i) const { return down_[i]; }
  // Union of principal down-sets over the variables in t.
  VarMask down_set(VarMask t) const;
  VarMask down_set_of(const Monomial& m) const { return down_set(m.support()); }
  MonomialPrime down_prime(int i) const { return {n_, down_[i]}; }

  VarMask maximal_elements() const;
  bool is_order_ideal(VarMask a) const;
  // True iff the Hasse diagram restricted to the order ideal a is connected
  // (equivalently: a is not a disjoint union of two nonempty order ideals).
  // Throws MathError when a is not an order ideal.
  bool is_connected_order_ideal(VarMask a) const;

  // Connected components of the comparability graph; each mask is one
  // component.  Singletons count.
  std::vector<VarMask> components() const;

  // All order ideals (down-closed subsets), the empty set included.
  std::vector<VarMask> order_ideals() const;

  bool refines(const Poset& other) const;
  bool is_chain() const;
  bool is_antichain() const { return covers_.empty(); }

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && down_ == o.down_;
  }
  bool operator!=(const Poset& o) const { return !(*this == o); }

private:
  int n_ = 0;
  std::vector<VarMask> down_;  // down_[i] = mask of j with x_j <=_Q x_i
  std::vector<std::pair<int, int>> covers_;
};

// All naturally labeled posets on n elements (transitive subsets of the
// strict upper-triangular relation).  Exponential in n(n-1)/2; intended for
// exhaustive testing with small n.
std::vector<Poset> all_naturally_labeled_posets(int n);

}  // namespace qborel
