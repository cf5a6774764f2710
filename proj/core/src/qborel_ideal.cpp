#include "qborel/qborel_ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace qborel {

MonomialIdeal q_closure(const Poset& q, const std::vector<Monomial>& gens,
                        std::size_t node_limit) {
  const int n = q.size();
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue;
  for (const Monomial& g : gens) {
    if (g.nvars() != n) throw MathError("generator has wrong variable count");
    if (seen.insert(g).second) queue.push_back(g);
  }
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (m[j] <= 0) continue;
      for (int i = 0; i < j; ++i) {
        if (!q.less(i, j)) continue;
        Monomial moved = m.swap_var(j, i);
        if (seen.insert(moved).second) {
          if (seen.size() > node_limit)
            throw LimitError("q_closure node limit exceeded");
          queue.push_back(moved);
        }
      }
    }
  }
  return MonomialIdeal::make(n, std::vector<Monomial>(seen.begin(), seen.end()));
}

bool is_q_borel(const Poset& q, const MonomialIdeal& ideal) {
  for (const Monomial& m : ideal.gens()) {
    for (int j = 0; j < q.size(); ++j) {
      if (m[j] <= 0) continue;
      for (int i = 0; i < j; ++i) {
        if (!q.less(i, j)) continue;
        if (!ideal.contains(m.swap_var(j, i))) return false;
      }
    }
  }
  return true;
}

Poset max_stabilizing_poset(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw MathError("max_stabilizing_poset: zero ideal");
  const int n = ideal.nvars();
  std::vector<std::pair<int, int>> rel;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      bool ok = true;
      for (const Monomial& m : ideal.gens()) {
        if (m[j] <= 0) continue;
        if (!ideal.contains(m.swap_var(j, i))) {
          ok = false;
          break;
        }
      }
      if (ok) rel.emplace_back(i, j);
    }
  }
  Poset q = Poset::build(n, rel);
  if (!is_q_borel(q, ideal))
    throw MathError("max_stabilizing_poset: postcondition failed");
  return q;
}

std::vector<Monomial> min_q_generators(const Poset& q,
                                       const MonomialIdeal& ideal,
                                       std::size_t node_limit) {
  if (!is_q_borel(q, ideal))
    throw MathError("min_q_generators: ideal is not Q-Borel");
  std::vector<Monomial> gens = ideal.gens();
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::vector<Monomial> rest;
      rest.reserve(gens.size() - 1);
      for (std::size_t l = 0; l < gens.size(); ++l)
        if (l != k) rest.push_back(gens[l]);
      if (q_closure(q, rest, node_limit).contains(gens[k])) {
        gens = std::move(rest);
        removed = true;
        break;
      }
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

QBorelIdeal make_q_borel(const Poset& q, const std::vector<Monomial>& gens,
                         std::size_t node_limit) {
  QBorelIdeal r;
  r.poset = q;
  r.expansion = q_closure(q, gens, node_limit);
  r.q_generators = min_q_generators(q, r.expansion, node_limit);
  return r;
}

PrimeFactorization principal_factorization(const Poset& q, const Monomial& m) {
  if (m.is_unit())
    throw MathError("principal_factorization: unit generator");
  PrimeFactorization f;
  for (int i = 0; i < q.size(); ++i) {
    if (m[i] <= 0) continue;
    f.factors[q.down_prime(i)] += m[i];
  }
  return f;
}

MonomialIdeal expand_factorization(int n, const PrimeFactorization& f) {
  MonomialIdeal r = MonomialIdeal::unit_ideal(n);
  for (const auto& [p, e] : f.factors) r = product(r, prime_power(p, e));
  return r;
}

namespace {

// Kuhn augmenting-path matching on the expanded bipartite graph.
class Matcher {
public:
  Matcher(int nleft, int nright) : adj_(nleft), match_right_(nright, -1) {}

  void add_edge(int l, int r) { adj_[l].push_back(r); }

  int max_matching() {
    int matched = 0;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      visited_.assign(match_right_.size(), false);
      if (try_augment(static_cast<int>(l))) ++matched;
    }
    return matched;
  }

private:
  bool try_augment(int l) {
    for (int r : adj_[l]) {
      if (visited_[r]) continue;
      visited_[r] = true;
      if (match_right_[r] == -1 || try_augment(match_right_[r])) {
        match_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;
  std::vector<bool> visited_;
};

}  // namespace

bool principal_membership(const Poset& q, const Monomial& m,
                          const Monomial& cand) {
  if (m.is_unit()) return true;
  if (cand.degree() < m.degree()) return false;
  // Left vertices: factors of m with multiplicity.  Right: factors of cand.
  std::vector<int> left, right;
  for (int i = 0; i < q.size(); ++i)
    for (Exponent k = 0; k < m[i]; ++k) left.push_back(i);
  for (int j = 0; j < q.size(); ++j)
    for (Exponent k = 0; k < cand[j]; ++k) right.push_back(j);
  Matcher matcher(static_cast<int>(left.size()),
                  static_cast<int>(right.size()));
  for (std::size_t a = 0; a < left.size(); ++a)
    for (std::size_t b = 0; b < right.size(); ++b)
      if (q.leq(right[b], left[a]))
        matcher.add_edge(static_cast<int>(a), static_cast<int>(b));
  return matcher.max_matching() == static_cast<int>(left.size());
}

MonomialIdeal witness_ideal(const Poset& q, int max_n) {
  if (q.size() > max_n)
    throw LimitError("witness_ideal: poset too large for the configured bound");
  MonomialIdeal r = MonomialIdeal::unit_ideal(q.size());
  for (VarMask a : q.order_ideals()) {
    if (a == 0) continue;
    r = product(r, prime_power(MonomialPrime(q.size(), a), 1));
  }
  return r;
}

bool is_polymatroidal(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  if (g.size() <= 1) return true;
  if (!ideal.is_equigenerated()) return false;
  auto in_gens = [&](const Monomial& m) {
    return std::binary_search(g.begin(), g.end(), m);
  };
  for (const Monomial& m : g) {
    for (const Monomial& other : g) {
      for (int i = 0; i < ideal.nvars(); ++i) {
        if (m[i] <= other[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < ideal.nvars() && !exchanged; ++j) {
          if (other[j] <= m[j]) continue;
          if (in_gens(m.swap_var(i, j))) exchanged = true;
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

QBorelIdeal intersect_principal(const Poset& q, const Monomial& a,
                                const Monomial& b) {
  MonomialIdeal meet =
      intersect(q_closure(q, {a}), q_closure(q, {b}));
  QBorelIdeal r;
  r.poset = q;
  r.expansion = meet;
  r.q_generators = min_q_generators(q, meet);
  return r;
}

}  // namespace qborel
