#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qborel/error.hpp"

namespace qborel {

using Exponent = std::int64_t;
// Sentinel for an infinite exponent in extended exponent vectors; the
// corresponding pure power is absent (x^inf = 0).
inline constexpr Exponent kInfExp = std::numeric_limits<Exponent>::max();
// Bitmask over variable indices.  Everything in this library lives in at
// most 64 variables; practical instances use far fewer.
using VarMask = std::uint64_t;

/// A monomial in a fixed polynomial ring, stored as its exponent vector.
/// The all-zeros vector is the unit monomial 1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {
    for (Exponent x : e_)
      if (x < 0) throw MathError("negative exponent in monomial");
  }

  static Monomial unit(int n) { return Monomial(std::vector<Exponent>(n, 0)); }
  static Monomial var(int n, int i, Exponent k = 1) {
    std::vector<Exponent> e(n, 0);
    e.at(i) = k;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  Exponent operator[](int i) const { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  Exponent degree() const;
  bool is_unit() const { return degree() == 0; }
  bool is_squarefree() const;
  // True when the monomial is a power x_i^k of a single variable, k >= 1.
  bool is_pure_power() const;

  VarMask support() const;
  int support_size() const;
  // Largest / smallest variable index dividing the monomial; -1 for the unit.
  int max_var() const;
  int min_var() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Exact division; throws MathError if not divisible.
  Monomial operator/(const Monomial& other) const;

  Monomial with_exponent(int i, Exponent k) const;
  // m * x_i / x_j, the single poset-Borel move.  Requires x_j | m.
  Monomial swap_var(int from_j, int to_i) const;

  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  // Canonical order: total degree first, then descending reverse-lex within
  // a degree (the usual textbook display order a^2, ab, b^2, ac, ...).
  bool operator<(const Monomial& o) const { return canonical_less(*this, o); }

  static bool canonical_less(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  std::string str(const std::vector<std::string>& names) const;

private:
  std::vector<Exponent> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Enumerates all monomials in n variables of total degree exactly d,
// invoking fn on each (in canonical order of discovery).
void for_each_monomial_of_degree(int n, Exponent d,
                                 const std::function<void(const Monomial&)>& fn);

}  // namespace qborel
