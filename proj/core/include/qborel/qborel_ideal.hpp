#pragma once

#include <map>
#include <vector>

#include "qborel/poset.hpp"
#include "qborel/prime_family.hpp"

namespace qborel {

inline constexpr std::size_t kDefaultClosureLimit = 1u << 20;

/// Prime factorization of a principal poset-Borel ideal: each variable
/// x_i dividing the generator contributes its principal down-set prime with
/// the exponent of x_i (exponents merge when two variables share a down-set).
struct PrimeFactorization {
  std::map<MonomialPrime, Exponent> factors;

  bool operator==(const PrimeFactorization& o) const {
    return factors == o.factors;
  }
};

/// A monomial ideal together with a poset that stabilizes it and its unique
/// minimal poset-Borel generating set.
struct QBorelIdeal {
  Poset poset;
  std::vector<Monomial> q_generators;  // canonical order
  MonomialIdeal expansion;
};

// Smallest Q-Borel ideal containing X: breadth-first closure of X under all
// single moves x_j -> x_i with x_i <_Q x_j (degree-preserving, so finite),
// then minimalization.  node_limit caps the closure frontier.
MonomialIdeal q_closure(const Poset& q, const std::vector<Monomial>& gens,
                        std::size_t node_limit = kDefaultClosureLimit);

// True iff every move on every minimal generator stays in the ideal
// (checking minimal generators suffices: a move inside the cofactor keeps a
// multiple of the generator, a move inside the generator lands in its
// closure).
bool is_q_borel(const Poset& q, const MonomialIdeal& ideal);

// The refinement-largest poset stabilizing the ideal: relations are exactly
// the individually stabilizing pairs; their union is transitive because
// stabilizing moves compose.
Poset max_stabilizing_poset(const MonomialIdeal& ideal);

// Unique minimal Q-Borel generating set, by greedy removal over the minimal
// monomial generators.  Throws MathError unless the ideal is Q-Borel.
std::vector<Monomial> min_q_generators(const Poset& q,
                                       const MonomialIdeal& ideal,
                                       std::size_t node_limit = kDefaultClosureLimit);

// Builds the full record for Q(X).
QBorelIdeal make_q_borel(const Poset& q, const std::vector<Monomial>& gens,
                         std::size_t node_limit = kDefaultClosureLimit);

// Prime factorization of the principal ideal Q(m); the product of the
// factors equals the expansion of Q(m).  Requires m != 1.
PrimeFactorization principal_factorization(const Poset& q, const Monomial& m);

MonomialIdeal expand_factorization(int n, const PrimeFactorization& f);

// Membership cand in Q(m) decided by bipartite matching: cand lies in Q(m)
// iff deg(cand) >= deg(m) and the factors of m (with multiplicity) can be
// matched injectively to factors of cand, each matched factor of cand lying
// weakly below its partner in the poset.
bool principal_membership(const Poset& q, const Monomial& m,
                          const Monomial& cand);

// Product of all nonempty order ideals of q; its maximal stabilizing poset
// is q itself.  Guarded for small n (the order-ideal count is exponential).
MonomialIdeal witness_ideal(const Poset& q, int max_n = 10);

// Exchange-condition check on the minimal generators; false for mixed
// degrees, vacuously true for 0 or 1 generators.
bool is_polymatroidal(const MonomialIdeal& ideal);

// Q(a) cap Q(b) for principal Q-Borel ideals, as a Q-Borel ideal.
QBorelIdeal intersect_principal(const Poset& q, const Monomial& a,
                                const Monomial& b);

}  // namespace qborel
