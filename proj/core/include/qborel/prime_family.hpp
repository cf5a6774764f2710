#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qborel/ideal.hpp"

namespace qborel {

/// A finite family of monomial primes ordered by inclusion of supports.
/// Duplicates are collapsed; the storage order is canonical.
class PrimeFamily {
public:
  PrimeFamily() = default;
  PrimeFamily(int n, std::vector<MonomialPrime> primes);

  int nvars() const { return n_; }
  const std::vector<MonomialPrime>& primes() const { return primes_; }
  bool contains(const MonomialPrime& p) const;
  int index_of(const MonomialPrime& p) const;  // -1 if absent

  /// Mobius function of the inclusion order on the family:
  ///   mu(q, q) = 1,   mu(q, p) = -sum over q <= r < p of mu(q, r).
  /// Throws MathError unless q and p both belong to the family and q <= p.
  /// Pure; the recursion memoizes per call, so shared instances are safe to
  /// use from several threads.
  std::int64_t mobius(const MonomialPrime& q, const MonomialPrime& p) const;

  bool operator==(const PrimeFamily& o) const {
    return n_ == o.n_ && primes_ == o.primes_;
  }

private:
  std::int64_t mobius_idx(int qi, int pi,
                          std::map<std::pair<int, int>, std::int64_t>& memo) const;

  int n_ = 0;
  std::vector<MonomialPrime> primes_;
};

/// Smallest superset of the family closed under pairwise union of supports.
PrimeFamily sum_closure(const PrimeFamily& family);

}  // namespace qborel
