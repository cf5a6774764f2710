#pragma once

// Shared helpers for the test suites: literal builders, brute-force oracles,
// and random generators.

#include <random>
#include <string>
#include <vector>

#include "qborel/decomp.hpp"
#include "qborel/resolution.hpp"
#include "qborel/session.hpp"

namespace testsupport {

using namespace qborel;

inline Ring ring_of(const std::string& letters) {
  Ring r;
  for (char c : letters) r.names.push_back(std::string(1, c));
  return r;
}

inline Monomial mono(const Ring& r, const std::string& text) {
  return parse_monomial(r, text);
}

inline MonomialIdeal ideal_of(const Ring& r,
                              const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(mono(r, g));
  return MonomialIdeal::make(r.nvars(), ms);
}

// Membership-agreement oracle: two ideals agree on every monomial of total
// degree <= bound.
inline bool equal_up_to_degree(const MonomialIdeal& a, const MonomialIdeal& b,
                               Exponent bound) {
  bool ok = true;
  for (Exponent d = 0; d <= bound && ok; ++d)
    for_each_monomial_of_degree(a.nvars(), d, [&](const Monomial& m) {
      if (a.contains(m) != b.contains(m)) ok = false;
    });
  return ok;
}

inline Poset vee_poset() {
  // a < b, a < c
  return Poset::build(3, {{0, 1}, {0, 2}});
}

inline Poset example_poset6() {
  // covers a<d, d<f, c<f, b<e, c<e on a..f
  return Poset::build(6, {{0, 3}, {3, 5}, {2, 5}, {1, 4}, {2, 4}});
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, Exponent maxdeg,
                                bool nonunit = true) {
  for (;;) {
    std::vector<Exponent> e(n, 0);
    Exponent total = 1 + static_cast<Exponent>(rng() % maxdeg);
    for (Exponent k = 0; k < total; ++k) e[rng() % n] += 1;
    Monomial m{e};
    if (!nonunit || !m.is_unit()) return m;
  }
}

inline Poset random_poset(std::mt19937_64& rng, int n, int density_pct = 35) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 100) < density_pct) rel.emplace_back(i, j);
  return Poset::build(n, rel);
}

inline MonomialPrime random_prime(std::mt19937_64& rng, int n) {
  VarMask m = 0;
  while (m == 0) m = rng() & ((VarMask{1} << n) - 1);
  return MonomialPrime(n, m);
}

}  // namespace testsupport
