#include "qborel/decomp.hpp"

#include <algorithm>
#include <set>

namespace qborel {

MonomialIdeal irreducible_component_ideal(const ExtExponents& f) {
  const int n = static_cast<int>(f.size());
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    if (f[i] == kInfExp) continue;
    gens.push_back(Monomial::var(n, i, f[i]));
  }
  return MonomialIdeal::make(n, std::move(gens));
}

PrimePowerIntersection product_to_primary(int n, const PrimeFactorization& f) {
  std::vector<MonomialPrime> support;
  for (const auto& [p, e] : f.factors) {
    if (e < 0) throw MathError("product_to_primary: negative exponent");
    if (e > 0) support.push_back(p);
  }
  PrimeFamily closed = sum_closure(PrimeFamily(n, support));
  PrimePowerIntersection d;
  for (const MonomialPrime& p : closed.primes()) {
    Exponent a = 0;
    for (const auto& [q, e] : f.factors)
      if (q.subset_of(p)) a += e;
    if (a > 0) d.components[p] = a;
  }
  return d;
}

MonomialIdeal intersection_ideal(int n, const PrimePowerIntersection& d) {
  MonomialIdeal r = MonomialIdeal::unit_ideal(n);
  for (const auto& [p, a] : d.components) {
    if (a > 0) r = intersect(r, prime_power(p, a));
  }
  return r;
}

SignedPrimeExponents primary_to_product(const PrimePowerIntersection& d,
                                        const PrimeFamily& family) {
  for (const auto& [p, a] : d.components) {
    (void)a;
    if (!family.contains(p))
      throw MathError("primary_to_product: family misses a component prime");
  }
  auto a_of = [&](const MonomialPrime& p) -> Exponent {
    auto it = d.components.find(p);
    return it == d.components.end() ? 0 : it->second;
  };
  SignedPrimeExponents out;
  for (const MonomialPrime& p : family.primes()) {
    Exponent e = 0;
    for (const MonomialPrime& q : family.primes())
      if (q.subset_of(p)) e += family.mobius(q, p) * a_of(q);
    if (e != 0) out.exponents[p] = e;
  }
  return out;
}

PrimePowerIntersection prune_redundant(int n,
                                       const PrimePowerIntersection& d) {
  PrimePowerIntersection cur = d;
  bool removed = true;
  while (removed) {
    removed = false;
    for (const auto& [p, a] : cur.components) {
      PrimePowerIntersection rest = cur;
      rest.components.erase(p);
      if (prime_power(p, a).contains_ideal(intersection_ideal(n, rest))) {
        cur = std::move(rest);
        removed = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<MonomialPrime> associated_primes(const Poset& q,
                                             const Monomial& m) {
  if (m.is_unit()) throw MathError("associated_primes: unit generator");
  const VarMask supp = m.support();
  std::vector<int> vars;
  for (int i = 0; i < q.size(); ++i)
    if ((supp >> i) & 1) vars.push_back(i);
  std::set<VarMask> seen;
  std::vector<MonomialPrime> out;
  for (VarMask t = 1; t < (VarMask{1} << vars.size()); ++t) {
    VarMask subset = 0;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if ((t >> k) & 1) subset |= VarMask{1} << vars[k];
    VarMask a = q.down_set(subset);
    if (!seen.insert(a).second) continue;
    if (q.is_connected_order_ideal(a)) out.emplace_back(q.size(), a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimePowerIntersection principal_primary_decomposition(const Poset& q,
                                                       const Monomial& m) {
  PrimePowerIntersection d;
  for (const MonomialPrime& p : associated_primes(q, m)) {
    Exponent a = 0;
    for (int i = 0; i < q.size(); ++i)
      if (m[i] > 0 && (q.down_mask(i) & ~p.mask) == 0) a += m[i];
    d.components[p] = a;
  }
  if (prune_redundant(q.size(), d) != d)
    throw MathError("principal_primary_decomposition: irredundancy failed");
  return d;
}

std::pair<PrimeFactorization, PrimeFactorization> colon_representation(
    int n, const PrimePowerIntersection& d, const PrimeFamily& family) {
  if (sum_closure(family) != family)
    throw MathError("colon_representation: family is not sum-closed");
  SignedPrimeExponents e = primary_to_product(d, family);
  PrimeFactorization numer, denom;
  for (const auto& [p, ep] : e.exponents) {
    if (ep > 0)
      numer.factors[p] = ep;
    else
      denom.factors[p] = -ep;
  }
  MonomialIdeal lhs = quotient(expand_factorization(n, numer),
                               expand_factorization(n, denom));
  if (lhs != intersection_ideal(n, d))
    throw MathError("colon_representation: colon identity failed");
  return {numer, denom};
}

std::vector<ExtExponents> q_irreducible_expand(const Poset& q,
                                               const ExtExponents& e) {
  const int n = q.size();
  if (static_cast<int>(e.size()) != n)
    throw MathError("q_irreducible_expand: wrong vector length");
  // f_i is forced finite iff some finite e_k sits weakly above x_i.
  std::vector<Exponent> box(n, kInfExp);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (e[k] == kInfExp || !q.leq(i, k)) continue;
      box[i] = (box[i] == kInfExp) ? e[k] : std::min(box[i], e[k]);
    }
  }
  std::vector<int> finite_vars;
  for (int i = 0; i < n; ++i)
    if (box[i] != kInfExp) finite_vars.push_back(i);
  for (int i : finite_vars)
    if (box[i] <= 0) return {};  // a zero exponent makes Q(x^e) the unit ideal

  auto feasible = [&](const ExtExponents& f) {
    for (int k = 0; k < n; ++k) {
      if (e[k] == kInfExp) continue;
      Exponent s = 0;
      for (int i : finite_vars)
        if (q.leq(i, k)) s += f[i] - 1;
      if (s > e[k] - 1) return false;
    }
    return true;
  };

  std::vector<ExtExponents> all;
  ExtExponents cur(n, kInfExp);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == finite_vars.size()) {
      if (feasible(cur)) all.push_back(cur);
      return;
    }
    int i = finite_vars[idx];
    for (Exponent v = 1; v <= box[i]; ++v) {
      cur[i] = v;
      rec(idx + 1);
    }
    cur[i] = kInfExp;
  };
  rec(0);

  // Keep the componentwise-maximal vectors (inf counts as top).
  std::vector<ExtExponents> maximal;
  for (const auto& f : all) {
    bool dominated = false;
    for (const auto& g : all) {
      if (&f == &g || f == g) continue;
      bool le = true;
      for (int i = 0; i < n; ++i) {
        Exponent fi = f[i], gi = g[i];
        if (fi == kInfExp && gi != kInfExp) {
          le = false;
          break;
        }
        if (fi != kInfExp && gi != kInfExp && fi > gi) {
          le = false;
          break;
        }
      }
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

MonomialIdeal q_irreducible_ideal(const Poset& q, const ExtExponents& e,
                                  std::size_t node_limit) {
  const int n = q.size();
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    if (e[i] == kInfExp) continue;
    gens.push_back(Monomial::var(n, i, e[i]));
  }
  return q_closure(q, gens, node_limit);
}

namespace {

// Factors m relative to z into (z-exponent, strictly-below part, incomparable
// part).  Requires no variable of m strictly above z.
struct ZFactor {
  Exponent zexp = 0;
  Monomial below;
  Monomial incomp;
};

ZFactor factor_at(const Poset& q, const Monomial& m, int z) {
  const int n = q.size();
  ZFactor f;
  f.zexp = m[z];
  std::vector<Exponent> below(n, 0), incomp(n, 0);
  for (int i = 0; i < n; ++i) {
    if (i == z || m[i] == 0) continue;
    if (q.less(i, z))
      below[i] = m[i];
    else if (q.less(z, i))
      throw MathError("factor_at: z is not maximal in the support");
    else
      incomp[i] = m[i];
  }
  f.below = Monomial(below);
  f.incomp = Monomial(incomp);
  return f;
}

}  // namespace

std::pair<Monomial, Monomial> principal_split(const Poset& q,
                                              const Monomial& m) {
  if (m.is_unit()) throw MathError("principal_split: unit generator");
  const VarMask supp = m.support();
  for (int z = 0; z < q.size(); ++z) {
    if (!((supp >> z) & 1)) continue;
    bool zmax = true;
    for (int w = z + 1; w < q.size(); ++w)
      if (((supp >> w) & 1) && q.less(z, w)) zmax = false;
    if (!zmax) continue;
    ZFactor f = factor_at(q, m, z);
    if (f.below.is_unit()) continue;
    Exponent d = f.below.degree();
    Monomial first = Monomial::var(q.size(), z, f.zexp + d) * f.incomp;
    Monomial second = f.below * f.incomp;
    return {first, second};
  }
  throw MathError(
      "principal_split: no maximal variable of the generator has a strictly "
      "lower part");
}

std::vector<ExtExponents> maximal_q_irreducibles_over(const Poset& q,
                                                      const MonomialIdeal& ideal,
                                                      Exponent cap) {
  const int n = q.size();
  if (n > 8) throw LimitError("maximal_q_irreducibles_over: n too large");
  // Enumerate e in ({1..cap} cup {inf})^n with sum of prime powers
  // containing the ideal.  Membership of g in Q(x^e) = sum p_i^{e_i} means
  // some finite e_i is covered by the factors of g under x_i.
  auto contains_ideal = [&](const ExtExponents& e) {
    for (const Monomial& g : ideal.gens()) {
      bool in = false;
      for (int i = 0; i < n && !in; ++i) {
        if (e[i] == kInfExp) continue;
        Exponent cnt = 0;
        for (int j = 0; j < n; ++j)
          if (q.leq(j, i)) cnt += g[j];
        if (cnt >= e[i]) in = true;
      }
      if (!in) return false;
    }
    return true;
  };
  std::vector<ExtExponents> found;
  ExtExponents cur(n, kInfExp);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (contains_ideal(cur)) found.push_back(cur);
      return;
    }
    cur[i] = kInfExp;
    rec(i + 1);
    for (Exponent v = 1; v <= cap; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = kInfExp;
  };
  rec(0);
  std::vector<ExtExponents> maximal;
  for (const auto& f : found) {
    bool dominated = false;
    for (const auto& g : found) {
      if (f == g) continue;
      bool le = true;
      for (int i = 0; i < n; ++i) {
        bool fi_inf = f[i] == kInfExp, gi_inf = g[i] == kInfExp;
        if (fi_inf && !gi_inf) le = false;
        if (!fi_inf && !gi_inf && f[i] > g[i]) le = false;
        if (!le) break;
      }
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

namespace {

struct IrredDecompState {
  const Poset& q;
  std::size_t node_limit;
  int budget = 20000;
  std::set<ExtExponents> leaves;
};

// Certified decide-by-enumeration for ideals the recursive splits cannot
// reach: either returns the componentwise-maximal Q-irreducible ideals over
// the input (their intersection equals it), or throws with a witness
// monomial lying in every Q-irreducible ideal containing the input.
void decide_by_enumeration(IrredDecompState& st, const MonomialIdeal& ideal) {
  const int n = st.q.size();
  Exponent cap = ideal.max_gen_degree() + 1;
  for (int round = 0; round < 3; ++round) {
    std::vector<ExtExponents> maximal =
        maximal_q_irreducibles_over(st.q, ideal, cap);
    MonomialIdeal meet = MonomialIdeal::unit_ideal(n);
    for (const auto& e : maximal)
      meet = intersect(meet, q_irreducible_ideal(st.q, e, st.node_limit));
    if (meet == ideal) {
      for (const auto& e : maximal) st.leaves.insert(e);
      return;
    }
    // Some generator of the meet is missing from the ideal; if its degree is
    // below the cap it witnesses impossibility, otherwise enlarge the cap.
    Monomial witness;
    bool have = false;
    for (const Monomial& g : meet.gens()) {
      if (!ideal.contains(g)) {
        witness = g;
        have = true;
        break;
      }
    }
    if (!have)
      throw MathError("decide_by_enumeration: inconsistent meet");
    if (witness.degree() < cap)
      throw NoQIrreducibleDecomposition(
          witness, cap,
          "no decomposition into Q-irreducible ideals exists: a witness "
          "monomial outside the ideal lies in every Q-irreducible ideal "
          "containing it");
    cap = witness.degree() + 1;
  }
  throw LimitError("q_irreducible_decomposition: enumeration cap not settled");
}

void decompose(IrredDecompState& st, const std::vector<Monomial>& gens) {
  if (--st.budget < 0)
    throw LimitError("q_irreducible_decomposition: recursion budget exceeded");
  const int n = st.q.size();
  MonomialIdeal ideal = q_closure(st.q, gens, st.node_limit);
  std::vector<Monomial> qg = min_q_generators(st.q, ideal, st.node_limit);

  ExtExponents evec(n, kInfExp);
  bool all_pure = true;
  for (const Monomial& g : qg) {
    if (!g.is_pure_power()) {
      all_pure = false;
      break;
    }
    evec[g.max_var()] = g.degree();
  }
  if (all_pure) {
    st.leaves.insert(evec);
    return;
  }

  // Variables dividing the non-pure-power Q-generators, maximal ones first
  // by descending index.
  VarMask candvars = 0;
  for (const Monomial& g : qg)
    if (!g.is_pure_power()) candvars |= g.support();
  for (int z = n - 1; z >= 0; --z) {
    if (!((candvars >> z) & 1)) continue;
    bool zmax = true;
    for (int w = z + 1; w < n; ++w)
      if (((candvars >> w) & 1) && st.q.less(z, w)) zmax = false;
    if (!zmax) continue;
    for (const Monomial& m1 : qg) {
      if (m1.is_pure_power() || m1[z] <= 0) continue;
      ZFactor f = factor_at(st.q, m1, z);
      std::vector<Monomial> rest;
      for (const Monomial& g : qg)
        if (g != m1) rest.push_back(g);
      if (!f.below.is_unit()) {
        // Raised-power split off the strictly-lower part.
        Monomial first =
            Monomial::var(n, z, f.zexp + f.below.degree()) * f.incomp;
        Monomial second = f.below * f.incomp;
        std::vector<Monomial> jg = qg;
        jg.push_back(first);
        std::vector<Monomial> kg = rest;
        kg.push_back(second);
        decompose(st, jg);
        decompose(st, kg);
        return;
      }
      if (!f.incomp.is_unit() &&
          (st.q.down_mask(z) & st.q.down_set_of(f.incomp)) == 0) {
        // Coprime-support split, as for ordinary monomial ideals.
        std::vector<Monomial> jg = qg;
        jg.push_back(Monomial::var(n, z, f.zexp));
        std::vector<Monomial> kg = rest;
        kg.push_back(f.incomp);
        decompose(st, jg);
        decompose(st, kg);
        return;
      }
    }
  }
  decide_by_enumeration(st, ideal);
}

}  // namespace

std::vector<ExtExponents> q_irreducible_decomposition(
    const Poset& q, const std::vector<Monomial>& q_gens,
    std::size_t node_limit) {
  IrredDecompState st{q, node_limit, 20000, {}};
  decompose(st, q_gens);
  std::vector<ExtExponents> leaves(st.leaves.begin(), st.leaves.end());

  // Irredundancy pass (kept small; skipped for very large leaf sets).
  if (leaves.size() > 1 && leaves.size() <= 24) {
    MonomialIdeal ideal = q_closure(q, q_gens, node_limit);
    std::vector<MonomialIdeal> expanded;
    expanded.reserve(leaves.size());
    for (const auto& e : leaves)
      expanded.push_back(q_irreducible_ideal(q, e, node_limit));
    bool removed = true;
    while (removed && leaves.size() > 1) {
      removed = false;
      for (std::size_t k = 0; k < leaves.size(); ++k) {
        MonomialIdeal meet = MonomialIdeal::unit_ideal(q.size());
        for (std::size_t l = 0; l < leaves.size(); ++l)
          if (l != k) meet = intersect(meet, expanded[l]);
        if (meet == ideal) {
          leaves.erase(leaves.begin() + k);
          expanded.erase(expanded.begin() + k);
          removed = true;
          break;
        }
      }
    }
  }
  return leaves;
}

std::pair<MonomialIdeal, MonomialIdeal> borel_irreducible_split(
    const MonomialIdeal& ideal) {
  const int n = ideal.nvars();
  Poset chain = Poset::chain(n);
  if (!is_q_borel(chain, ideal))
    throw MathError("borel_irreducible_split: ideal is not Borel");
  const int last = n - 1;
  std::vector<Monomial> bgens = min_q_generators(chain, ideal);
  std::vector<Monomial> ngens, mgens;
  for (const Monomial& g : bgens) {
    if (g[last] > 0)
      ngens.push_back(g);
    else
      mgens.push_back(g);
  }
  if (ngens.empty())
    throw MathError("borel_irreducible_split: x_n divides no generator");
  for (const Monomial& g : ngens)
    if (g.is_pure_power())
      throw MathError(
          "borel_irreducible_split: ideal contains a pure power of x_n");
  for (const Monomial& g : ngens)
    if (g.degree() != ngens.front().degree())
      throw MathError(
          "borel_irreducible_split: the generators divisible by x_n have "
          "mixed degrees, so the one-step split does not apply");
  MonomialIdeal N = q_closure(chain, ngens);
  MonomialIdeal M = mgens.empty() ? MonomialIdeal::zero(n)
                                  : q_closure(chain, mgens);
  Exponent d = N.min_gen_degree();
  MonomialIdeal first =
      sum(q_closure(chain, {Monomial::var(n, last, d)}), M);
  MonomialIdeal second = sum(M, saturate_var(N, last));
  if (intersect(first, second) != ideal)
    throw MathError("borel_irreducible_split: split identity failed");
  return {first, second};
}

}  // namespace qborel
