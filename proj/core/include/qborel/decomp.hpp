#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "qborel/qborel_ideal.hpp"

namespace qborel {

/// Intersection of prime powers, canonical form: components with a_p = 0 are
/// dropped (they are the whole ring).
struct PrimePowerIntersection {
  std::map<MonomialPrime, Exponent> components;

  bool operator==(const PrimePowerIntersection& o) const {
    return components == o.components;
  }
};

/// Output of Mobius inversion of a prime-power decomposition; exponents may
/// be negative.  Zero exponents are dropped.
struct SignedPrimeExponents {
  std::map<MonomialPrime, Exponent> exponents;

  bool operator==(const SignedPrimeExponents& o) const {
    return exponents == o.exponents;
  }
};

/// Exponent vector of an irreducible monomial ideal (x_i^{f_i} : f_i < inf),
/// or of a Q-irreducible ideal Q(x_1^{e_1}, ..., x_n^{e_n}); entries live in
/// N cup {inf}.
using ExtExponents = std::vector<Exponent>;

MonomialIdeal irreducible_component_ideal(const ExtExponents& f);

// a_p = sum of e_q over q contained in p, over the sum-closure of the
// support; the intersection of the components equals the product ideal.
PrimePowerIntersection product_to_primary(int n, const PrimeFactorization& f);

MonomialIdeal intersection_ideal(int n, const PrimePowerIntersection& d);

// e_p = sum over q <= p in the family of mu(q, p) a_q.  The family must
// contain the support of d.
SignedPrimeExponents primary_to_product(const PrimePowerIntersection& d,
                                        const PrimeFamily& family);

// Drops components implied by the intersection of the others.
PrimePowerIntersection prune_redundant(int n, const PrimePowerIntersection& d);

// Associated primes of S/Q(m): down-sets of subsets of supp(m) that are
// connected order ideals.
std::vector<MonomialPrime> associated_primes(const Poset& q, const Monomial& m);

// Irredundant primary decomposition of the principal ideal Q(m), read off
// the poset: one component per associated prime p with exponent the total
// degree of m in the variables whose down-set lies inside p.
PrimePowerIntersection principal_primary_decomposition(const Poset& q,
                                                       const Monomial& m);

// Splits the Mobius inversion of d by sign into (J, K) with
// intersection_ideal(d) = (prod J : prod K); the family must be sum-closed.
// The colon identity is verified structurally before returning.
std::pair<PrimeFactorization, PrimeFactorization> colon_representation(
    int n, const PrimePowerIntersection& d, const PrimeFamily& family);

// Componentwise-maximal irreducible components of the Q-irreducible ideal
// Q(x^e): vectors f with f_i >= 1 where finite, f_i < inf whenever some
// finite e_k sits above x_i, and sum over x_i <= x_k of (f_i - 1) bounded by
// e_k - 1 for every finite e_k.
std::vector<ExtExponents> q_irreducible_expand(const Poset& q,
                                               const ExtExponents& e);

MonomialIdeal q_irreducible_ideal(const Poset& q, const ExtExponents& e,
                                  std::size_t node_limit = kDefaultClosureLimit);

// Writes m = z^{e_z} mu nu for a poset-maximal variable z of supp(m) with
// nonempty strictly-lower part mu (nu collects the variables incomparable to
// z).  Returns (z^{e_z + deg mu} nu, mu nu); Q(m) is the intersection of the
// principal ideals on the two parts.  Throws MathError when every maximal
// variable of supp(m) has mu = 1.
std::pair<Monomial, Monomial> principal_split(const Poset& q,
                                              const Monomial& m);

/// Thrown when an ideal provably has no decomposition into Q-irreducible
/// ideals.  The witness monomial lies in every Q-irreducible ideal
/// containing the input (checked over exponents capped at `cap`, which
/// suffices for monomials of smaller degree) but not in the input.
class NoQIrreducibleDecomposition : public MathError {
public:
  NoQIrreducibleDecomposition(Monomial witness, Exponent cap,
                              const std::string& msg)
      : MathError(msg), witness_(std::move(witness)), cap_(cap) {}

  const Monomial& witness() const { return witness_; }
  Exponent cap() const { return cap_; }

private:
  Monomial witness_;
  Exponent cap_;
};

// Decomposition of a Q-Borel ideal into Q-irreducible ideals, returned as
// extended exponent vectors.  Recursive splitting: a generator with a
// nonempty strictly-lower part under its maximal variable splits off a raised
// pure power; a generator whose remaining variables have down-sets disjoint
// from the maximal variable's splits like an ordinary monomial.  When
// neither applies, a capped enumeration of all Q-irreducible ideals
// containing the input either produces the decomposition or certifies that
// none exists (NoQIrreducibleDecomposition).
std::vector<ExtExponents> q_irreducible_decomposition(
    const Poset& q, const std::vector<Monomial>& q_gens,
    std::size_t node_limit = kDefaultClosureLimit);

// All Q-irreducible ideals containing `ideal`, with finite exponents capped
// at `cap`, restricted to the componentwise-maximal vectors.  Support for
// the impossibility certificate.
std::vector<ExtExponents> maximal_q_irreducibles_over(const Poset& q,
                                                      const MonomialIdeal& ideal,
                                                      Exponent cap);

// Splitting of a Borel ideal (chain poset) off its last variable:
// I = (Borel(x_n^d) + M) cap (M + (N : x_n^inf)) where N is spanned by the
// Borel generators divisible by x_n, M by the rest, and d is the least
// degree of a generator of N.  Requires x_n to divide some generator and I
// to contain no pure power of x_n.
std::pair<MonomialIdeal, MonomialIdeal> borel_irreducible_split(
    const MonomialIdeal& ideal);

}  // namespace qborel
