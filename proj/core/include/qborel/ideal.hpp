#pragma once

#include <string>
#include <vector>

#include "qborel/monomial.hpp"

namespace qborel {

/// A monomial ideal, held as its unique minimal generating set in canonical
/// order (so structural equality is ideal equality).  The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
  MonomialIdeal() : n_(0) {}
  explicit MonomialIdeal(int n) : n_(n) {}

  // Minimalizes and sorts; the generated ideal is unchanged.
  static MonomialIdeal make(int n, std::vector<Monomial> gens);
  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
  static MonomialIdeal unit_ideal(int n) {
    return make(n, {Monomial::unit(n)});
  }

  int nvars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  Exponent max_gen_degree() const;
  Exponent min_gen_degree() const;
  // True when every generator has the same total degree (vacuous for zero).
  bool is_equigenerated() const;
  Monomial lcm_of_gens() const;

  bool contains(const Monomial& m) const;
  bool contains_ideal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names) const;

private:
  int n_;
  std::vector<Monomial> gens_;
};

// Divisibility-minimal subset of gens in canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, Exponent k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// Colon ideal (a : b).
MonomialIdeal quotient(const MonomialIdeal& a, const MonomialIdeal& b);
// Saturation (a : x_i^inf).
MonomialIdeal saturate_var(const MonomialIdeal& a, int i);
// Number of monomials of total degree exactly d lying in the ideal.
long graded_count(const MonomialIdeal& a, Exponent d);

/// A monomial prime ideal, i.e. the ideal generated by a subset of the
/// variables, stored as a support mask.
struct MonomialPrime {
  int n = 0;
  VarMask mask = 0;

  MonomialPrime() = default;
  MonomialPrime(int nvars, VarMask m) : n(nvars), mask(m) {}

  int size() const { return __builtin_popcountll(mask); }
  bool empty() const { return mask == 0; }
  bool contains_var(int i) const { return (mask >> i) & 1; }
  bool subset_of(const MonomialPrime& o) const {
    return (mask & ~o.mask) == 0;
  }
  std::vector<int> vars() const;
  // Number of factors of m (with multiplicity) lying in this prime.
  Exponent count_in(const Monomial& m) const;

  bool operator==(const MonomialPrime& o) const {
    return n == o.n && mask == o.mask;
  }
  // Canonical order: support size, then variable sequence.
  bool operator<(const MonomialPrime& o) const;

  std::string str(const std::vector<std::string>& names) const;
};

MonomialIdeal prime_power(const MonomialPrime& p, Exponent a);

}  // namespace qborel
