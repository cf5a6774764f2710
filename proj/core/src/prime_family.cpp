#include "qborel/prime_family.hpp"

#include <algorithm>
#include <set>

namespace qborel {

PrimeFamily::PrimeFamily(int n, std::vector<MonomialPrime> primes) : n_(n) {
  for (auto& p : primes) {
    if (p.n != n) throw MathError("prime has wrong variable count");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  primes_ = std::move(primes);
}

bool PrimeFamily::contains(const MonomialPrime& p) const {
  return index_of(p) >= 0;
}

int PrimeFamily::index_of(const MonomialPrime& p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it != primes_.end() && *it == p)
    return static_cast<int>(it - primes_.begin());
  return -1;
}

std::int64_t PrimeFamily::mobius(const MonomialPrime& q,
                                 const MonomialPrime& p) const {
  int qi = index_of(q), pi = index_of(p);
  if (qi < 0 || pi < 0)
    throw MathError("mobius: prime not in the family");
  if (!q.subset_of(p))
    throw MathError("mobius: pair is not ordered q <= p");
  std::map<std::pair<int, int>, std::int64_t> memo;
  return mobius_idx(qi, pi, memo);
}

std::int64_t PrimeFamily::mobius_idx(
    int qi, int pi, std::map<std::pair<int, int>, std::int64_t>& memo) const {
  if (qi == pi) return 1;
  auto key = std::make_pair(qi, pi);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const MonomialPrime& q = primes_[qi];
  const MonomialPrime& p = primes_[pi];
  std::int64_t s = 0;
  for (int ri = 0; ri < static_cast<int>(primes_.size()); ++ri) {
    if (ri == pi) continue;
    const MonomialPrime& r = primes_[ri];
    if (q.subset_of(r) && r.subset_of(p)) s += mobius_idx(qi, ri, memo);
  }
  std::int64_t value = -s;
  memo[key] = value;
  return value;
}

PrimeFamily sum_closure(const PrimeFamily& family) {
  std::set<VarMask> masks;
  for (const auto& p : family.primes()) masks.insert(p.mask);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VarMask> cur(masks.begin(), masks.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (masks.insert(cur[i] | cur[j]).second) grew = true;
  }
  std::vector<MonomialPrime> out;
  out.reserve(masks.size());
  for (VarMask m : masks) out.emplace_back(family.nvars(), m);
  return PrimeFamily(family.nvars(), std::move(out));
}

}  // namespace qborel
