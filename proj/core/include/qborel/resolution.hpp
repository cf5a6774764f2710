#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qborel/qborel_ideal.hpp"

namespace qborel {

using Rational = boost::multiprecision::cpp_rational;

/// Basis element of a level of a free complex.  `gen` is the monomial
/// generator label, `face` the squarefree part (or Koszul/Taylor subset
/// label), `ypow` the power for the extended symbols of the two-incomparable
/// resolution.  The multidegree determines the grading.
struct BasisSymbol {
  Monomial gen;
  Monomial face;
  Exponent ypow = 0;
  Monomial multidegree;

  std::string str(const std::vector<std::string>& names) const;
};

/// One entry of a sparse differential column: coeff * mono against `row`.
struct DiffEntry {
  int row = 0;
  Rational coeff;
  Monomial mono;
};

/// A complex of multigraded free modules with monomial-coefficient
/// differentials.  diffs[i] maps level i+1 to level i (column-major).
/// Level-0 symbols carry the augmentation onto the ideal they generate.
struct FreeComplex {
  int n = 0;
  std::vector<std::vector<BasisSymbol>> levels;
  std::vector<std::vector<std::vector<DiffEntry>>> diffs;

  int top_level() const { return static_cast<int>(levels.size()) - 1; }
  std::vector<long> ranks() const;
  // Ideal generated by the level-0 multidegrees.
  MonomialIdeal target_ideal() const;
  Exponent max_symbol_degree() const;
};

/// Betti numbers, multigraded; `total(i, j)` aggregates by total degree.
struct BettiTable {
  std::map<int, std::map<Monomial, long>> entries;

  void add(int level, const Monomial& multidegree, long count = 1);
  long rank(int level) const;
  int max_level() const;
  std::map<int, std::map<Exponent, long>> by_total_degree() const;
  std::string grid(bool with_zero_column = false) const;

  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

BettiTable betti_of(const FreeComplex& f);

enum class LqOrder { DescendingRevlex, AscendingRevlex };

/// Result of the linear-quotient scan: for each generator (in the chosen
/// order) the variable set generating the colon by the earlier ones, or the
/// first index where that colon is not variable-generated.
struct LinearQuotients {
  bool ok = false;
  int fail_index = -1;
  std::vector<Monomial> order;
  std::vector<std::vector<int>> quotient_vars;
};

LinearQuotients linear_quotients(const MonomialIdeal& ideal, LqOrder order);

// Betti numbers from quotient-set sizes: each generator with r quotient
// variables contributes C(r, i) at level i (total degree deg(gen) + i).
// Throws MathError when linear quotients fail.
BettiTable lq_betti(const MonomialIdeal& ideal, LqOrder order);

// Minimal free resolution by iterated mapping cones over the linear
// quotients.  Throws MathError when linear quotients fail.
FreeComplex lq_resolution(const MonomialIdeal& ideal,
                          LqOrder order = LqOrder::DescendingRevlex);

// Projective dimension of S/Q(m) = n - #components(Q) + 1.  Requires Q to be
// the maximal stabilizing poset of Q(m) and every maximal element of Q to
// divide m.
int pdim_principal(const Poset& q, const Monomial& m);

// Codimension of Q(m): least size of a principal down-set of a variable
// dividing m.
int codim_principal(const Poset& q, const Monomial& m);

enum class CmCase { PrimePower, Principal, NotCm };

struct CmResult {
  bool cohen_macaulay = false;
  CmCase tag = CmCase::NotCm;
};

// S/Q(m) is Cohen-Macaulay iff m is a pure power (Q(m) is a power of the
// prime on the down-set of its variable) or Q(m) is principal as a monomial
// ideal.
CmResult is_cohen_macaulay(const Poset& q, const Monomial& m,
                           std::size_t node_limit = kDefaultClosureLimit);

// Unique factorization mu = beg * end with beg a minimal generator and
// max(beg) <= min(end), for a Borel ideal; computed by stripping the largest
// variable until a generator remains.  Throws MathError when mu is not in
// the ideal.
std::pair<Monomial, Monomial> beg_end(const MonomialIdeal& ideal,
                                      const Monomial& mu);

// Minimal free resolution of a Borel ideal on the symbols [m, alpha],
// alpha squarefree with max(alpha) < max(m).
FreeComplex ek_resolution(const MonomialIdeal& ideal);

// Minimal free resolution of an ideal Borel with respect to the poset
// x_1 < ... < x_t < y, x_t < z, on the symbols [m, alpha] and
// [m, alpha y^{k_m}] where k_m is least with (m/z) y^{k_m} in the ideal.
FreeComplex y_resolution(int t, const MonomialIdeal& ideal);

// Simplicial Taylor complex on the given generator list (kept verbatim:
// duplicates and non-minimal generators each get their own vertex).
FreeComplex taylor_resolution_on(int n, const std::vector<Monomial>& gens);
FreeComplex taylor_resolution(const MonomialIdeal& ideal);

// Degree-truncated splitting resolution of a Q-Borel ideal given by a
// generator list: principal inputs are resolved by linear quotients;
// otherwise a minimal-degree generator is split off and the three pieces
// (its principal ideal, the rest, their intersection) are assembled by a
// mapping cone.  Generators of degree > d are deleted first, so the result
// is an exact resolution of an ideal agreeing with the input in degrees
// <= d.  With `cancel` set, unit entries are eliminated by Gaussian
// pivoting, which yields minimal Betti numbers on chain posets.
FreeComplex truncated_resolution(const Poset& q,
                                 const std::vector<Monomial>& q_gens,
                                 Exponent d, bool cancel = false);

// Eliminates one unit (degree-zero, invertible) differential entry at a time
// until none remain.  Preserves the chain property and the resolved ideal.
FreeComplex cancel_units(FreeComplex f);

struct HomologyEntry {
  int level = 0;
  Monomial multidegree;
  long dim = 0;
};

struct VerifyReport {
  bool d2_ok = true;
  bool homogeneous = true;
  std::string detail;
  Exponent bound = -1;
  // Nonzero homology found by the exactness scan.  Level 0 entries measure
  // ker(augmentation)/im(d_1).
  std::vector<HomologyEntry> nonzero_homology;
  // Multidegrees where the level-0 cokernel indicator disagrees with
  // membership in the target ideal.
  std::vector<Monomial> coker_mismatch;
  long strands_checked = 0;

  bool exact() const {
    return d2_ok && homogeneous && nonzero_homology.empty() &&
           coker_mismatch.empty();
  }
};

// Symbolic check: every entry multigraded-homogeneous and d o d = 0.
VerifyReport verify_d2(const FreeComplex& f);

// Exact rank computation per multidegree strand up to the given total
// degree: reports all nonzero homology and every cokernel/membership
// disagreement at level 0.  When `intended` is given, the level-0 cokernel
// indicator is compared against membership in that ideal (used to certify a
// truncated complex against the untruncated input).
VerifyReport verify_exactness(const FreeComplex& f, Exponent bound,
                              const MonomialIdeal* intended = nullptr);

// Multigraded Betti numbers by upper Koszul simplicial complexes: for each
// multidegree b (componentwise below the lcm of the generators, total degree
// <= bound), beta_{i,b} = dim of reduced homology H_{i-1} of the complex of
// squarefree w with x^b / x^w in the ideal.
BettiTable koszul_betti(const MonomialIdeal& ideal, Exponent bound);

// Reduced rational homology dimensions, by dimension, of the simplicial
// complex with the given faces (must be subset-closed and contain the empty
// face when nonvoid).
std::map<int, long> reduced_homology_dims(const std::vector<VarMask>& faces);

// Exact rank of a dense rational matrix (consumed).
int rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace qborel
