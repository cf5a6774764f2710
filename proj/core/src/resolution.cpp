#include "qborel/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qborel {

std::string BasisSymbol::str(const std::vector<std::string>& names) const {
  std::string s = "[" + gen.str(names) + ", " + face.str(names);
  if (ypow > 0) {
    s += (face.is_unit() ? std::string("") : "*");
    if (face.is_unit()) s = "[" + gen.str(names) + ", ";
    s += "y^" + std::to_string(ypow);
  }
  return s + "]";
}

std::vector<long> FreeComplex::ranks() const {
  std::vector<long> r;
  r.reserve(levels.size());
  for (const auto& lvl : levels) r.push_back(static_cast<long>(lvl.size()));
  return r;
}

MonomialIdeal FreeComplex::target_ideal() const {
  std::vector<Monomial> g;
  if (!levels.empty())
    for (const auto& s : levels[0]) g.push_back(s.multidegree);
  return MonomialIdeal::make(n, std::move(g));
}

Exponent FreeComplex::max_symbol_degree() const {
  Exponent d = 0;
  for (const auto& lvl : levels)
    for (const auto& s : lvl) d = std::max(d, s.multidegree.degree());
  return d;
}

void BettiTable::add(int level, const Monomial& multidegree, long count) {
  if (count != 0) entries[level][multidegree] += count;
}

long BettiTable::rank(int level) const {
  auto it = entries.find(level);
  if (it == entries.end()) return 0;
  long r = 0;
  for (const auto& [m, c] : it->second) r += c;
  return r;
}

int BettiTable::max_level() const {
  int top = -1;
  for (const auto& [lvl, row] : entries)
    for (const auto& [m, c] : row)
      if (c != 0) top = std::max(top, lvl);
  return top;
}

std::map<int, std::map<Exponent, long>> BettiTable::by_total_degree() const {
  std::map<int, std::map<Exponent, long>> out;
  for (const auto& [lvl, row] : entries)
    for (const auto& [m, c] : row)
      if (c != 0) out[lvl][m.degree()] += c;
  return out;
}

std::string BettiTable::grid(bool) const {
  auto tot = by_total_degree();
  int top = max_level();
  if (top < 0) return "(empty)\n";
  Exponent lo = -1, hi = -1;
  for (const auto& [lvl, row] : tot)
    for (const auto& [d, c] : row) {
      Exponent shifted = d - lvl;
      if (lo < 0 || shifted < lo) lo = shifted;
      if (hi < 0 || shifted > hi) hi = shifted;
    }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= top; ++i) os << "  " << i;
  os << "\n";
  for (Exponent r = lo; r <= hi; ++r) {
    os << "  " << r << ": ";
    for (int i = 0; i <= top; ++i) {
      long c = 0;
      auto it = tot.find(i);
      if (it != tot.end()) {
        auto jt = it->second.find(r + i);
        if (jt != it->second.end()) c = jt->second;
      }
      os << "  " << (c ? std::to_string(c) : ".");
    }
    os << "\n";
  }
  return os.str();
}

BettiTable betti_of(const FreeComplex& f) {
  BettiTable t;
  for (std::size_t i = 0; i < f.levels.size(); ++i)
    for (const auto& s : f.levels[i])
      t.add(static_cast<int>(i), s.multidegree);
  return t;
}

LinearQuotients linear_quotients(const MonomialIdeal& ideal, LqOrder order) {
  LinearQuotients lq;
  lq.order = ideal.gens();
  std::sort(lq.order.begin(), lq.order.end(),
            [&](const Monomial& a, const Monomial& b) {
              Exponent da = a.degree(), db = b.degree();
              if (da != db) return da < db;
              if (order == LqOrder::DescendingRevlex)
                return Monomial::canonical_less(a, b);
              return Monomial::canonical_less(b, a);
            });
  lq.ok = true;
  for (std::size_t i = 0; i < lq.order.size(); ++i) {
    std::vector<Monomial> colon;
    for (std::size_t j = 0; j < i; ++j)
      colon.push_back(lq.order[j] / gcd(lq.order[j], lq.order[i]));
    colon = minimalize(std::move(colon));
    std::vector<int> vars;
    for (const Monomial& c : colon) {
      if (c.degree() != 1) {
        lq.ok = false;
        lq.fail_index = static_cast<int>(i);
        return lq;
      }
      vars.push_back(c.max_var());
    }
    std::sort(vars.begin(), vars.end());
    lq.quotient_vars.push_back(std::move(vars));
  }
  return lq;
}

BettiTable lq_betti(const MonomialIdeal& ideal, LqOrder order) {
  LinearQuotients lq = linear_quotients(ideal, order);
  if (!lq.ok)
    throw MathError("no linear quotients at index " +
                    std::to_string(lq.fail_index));
  BettiTable t;
  const int n = ideal.nvars();
  for (std::size_t j = 0; j < lq.order.size(); ++j) {
    const auto& vars = lq.quotient_vars[j];
    const std::size_t r = vars.size();
    for (std::uint32_t s = 0; s < (1u << r); ++s) {
      Monomial md = lq.order[j];
      for (std::size_t k = 0; k < r; ++k)
        if ((s >> k) & 1) md = md * Monomial::var(n, vars[k]);
      t.add(__builtin_popcount(s), md);
    }
  }
  return t;
}

int pdim_principal(const Poset& q, const Monomial& m) {
  if (m.is_unit()) throw MathError("pdim_principal: unit generator");
  VarMask maximal = q.maximal_elements();
  for (int i = 0; i < q.size(); ++i)
    if (((maximal >> i) & 1) && m[i] == 0)
      throw MathError("pdim_principal: maximal element x_" +
                      std::to_string(i + 1) + " does not divide the generator");
  MonomialIdeal expansion = q_closure(q, {m});
  if (max_stabilizing_poset(expansion) != q)
    throw MathError("pdim_principal: Q is not the maximal stabilizing poset");
  return q.size() - static_cast<int>(q.components().size()) + 1;
}

int codim_principal(const Poset& q, const Monomial& m) {
  if (m.is_unit()) throw MathError("codim_principal: unit generator");
  int best = q.size() + 1;
  for (int i = 0; i < q.size(); ++i)
    if (m[i] > 0)
      best = std::min(best, __builtin_popcountll(q.down_mask(i)));
  return best;
}

CmResult is_cohen_macaulay(const Poset& q, const Monomial& m,
                           std::size_t node_limit) {
  if (m.is_unit()) throw MathError("is_cohen_macaulay: unit generator");
  if (m.is_pure_power()) return {true, CmCase::PrimePower};
  if (q_closure(q, {m}, node_limit).gens().size() == 1)
    return {true, CmCase::Principal};
  return {false, CmCase::NotCm};
}

std::pair<Monomial, Monomial> beg_end(const MonomialIdeal& ideal,
                                      const Monomial& mu) {
  if (!ideal.contains(mu)) throw MathError("beg_end: monomial not in ideal");
  const auto& g = ideal.gens();
  auto is_gen = [&](const Monomial& m) {
    return std::binary_search(g.begin(), g.end(), m);
  };
  Monomial beg = mu;
  Monomial end = Monomial::unit(ideal.nvars());
  while (!is_gen(beg)) {
    int v = beg.max_var();
    if (v < 0) throw MathError("beg_end: ran out of variables");
    Monomial next = beg / Monomial::var(ideal.nvars(), v);
    if (!ideal.contains(next))
      throw MathError("beg_end: stripping left the ideal (not Borel?)");
    beg = next;
    end = end * Monomial::var(ideal.nvars(), v);
  }
  return {beg, end};
}

namespace {

// Unique factorization mu = g * rest with g a generator and
// max(g) <= min(rest), found by scanning the generators.  Used where the
// chain-greedy argument does not apply (Y-Borel ideals).
std::pair<Monomial, Monomial> beg_end_search(const MonomialIdeal& ideal,
                                             const Monomial& mu) {
  std::vector<std::pair<Monomial, Monomial>> hits;
  for (const Monomial& g : ideal.gens()) {
    if (!g.divides(mu)) continue;
    Monomial rest = mu / g;
    if (rest.is_unit() || g.max_var() <= rest.min_var())
      hits.emplace_back(g, rest);
  }
  if (hits.size() != 1)
    throw MathError("beg/end factorization is not unique (found " +
                    std::to_string(hits.size()) + ")");
  return hits[0];
}

Monomial mask_to_monomial(int n, VarMask mask) {
  std::vector<Exponent> e(n, 0);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) e[i] = 1;
  return Monomial(std::move(e));
}

std::vector<int> mask_vars(VarMask mask, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) v.push_back(i);
  return v;
}

// Accumulates sparse column entries, merging parallel terms.
class ColumnBuilder {
public:
  void add(int row, Rational coeff, const Monomial& mono) {
    auto it = acc_.find(row);
    if (it == acc_.end()) {
      acc_.emplace(row, std::make_pair(std::move(coeff), mono));
    } else {
      if (it->second.second != mono)
        throw MathError("inhomogeneous accumulation in differential");
      it->second.first += coeff;
    }
  }
  std::vector<DiffEntry> take() {
    std::vector<DiffEntry> out;
    for (auto& [row, cm] : acc_)
      if (cm.first != 0) out.push_back({row, cm.first, cm.second});
    return out;
  }

private:
  std::map<int, std::pair<Rational, Monomial>> acc_;
};

}  // namespace

FreeComplex ek_resolution(const MonomialIdeal& ideal) {
  const int n = ideal.nvars();
  if (!is_q_borel(Poset::chain(n), ideal))
    throw MathError("ek_resolution: ideal is not Borel");
  FreeComplex f;
  f.n = n;
  const auto& gens = ideal.gens();
  std::map<Monomial, int> gen_index;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gen_index[gens[i]] = static_cast<int>(i);

  std::map<std::pair<int, VarMask>, std::pair<int, int>> where;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Monomial& m = gens[gi];
    int maxv = m.max_var();
    VarMask all = maxv <= 0 ? 0 : ((VarMask{1} << maxv) - 1);
    for (VarMask a = 0;; a = (a - all) & all) {
      // iterate subsets of `all` including 0
      int lvl = __builtin_popcountll(a);
      if (static_cast<int>(f.levels.size()) <= lvl) f.levels.resize(lvl + 1);
      Monomial alpha = mask_to_monomial(n, a);
      f.levels[lvl].push_back(
          {m, alpha, 0, m * alpha});
      where[{static_cast<int>(gi), a}] = {
          lvl, static_cast<int>(f.levels[lvl].size()) - 1};
      if (a == all) break;
    }
  }

  f.diffs.assign(f.levels.size() > 0 ? f.levels.size() - 1 : 0, {});
  for (std::size_t lvl = 1; lvl < f.levels.size(); ++lvl)
    f.diffs[lvl - 1].resize(f.levels[lvl].size());

  for (const auto& [key, loc] : where) {
    auto [gi, amask] = key;
    auto [lvl, idx] = loc;
    if (lvl == 0) continue;
    const Monomial& m = gens[gi];
    std::vector<int> avars = mask_vars(amask, n);
    ColumnBuilder col;
    for (std::size_t t = 0; t < avars.size(); ++t) {
      int v = avars[t];
      Rational sign = (t % 2 == 0) ? 1 : -1;  // (-1)^{1+i}, i = t+1
      VarMask rest = amask & ~(VarMask{1} << v);
      col.add(where.at({gi, rest}).second, sign, Monomial::var(n, v));
      auto [beg, end] = beg_end(ideal, m * Monomial::var(n, v));
      int bi = gen_index.at(beg);
      auto it = where.find({bi, rest});
      if (it != where.end() && it->second.first == lvl - 1)
        col.add(it->second.second, -sign, end);
    }
    f.diffs[lvl - 1][idx] = col.take();
  }
  return f;
}

FreeComplex y_resolution(int t, const MonomialIdeal& ideal) {
  const int n = t + 2;
  if (ideal.nvars() != n)
    throw MathError("y_resolution: ideal must live in t + 2 variables");
  Poset y = Poset::y_poset(t);
  if (!is_q_borel(y, ideal))
    throw MathError("y_resolution: ideal is not Y-Borel");
  const int yvar = t, zvar = t + 1;

  FreeComplex f;
  f.n = n;
  const auto& gens = ideal.gens();
  std::map<Monomial, int> gen_index;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gen_index[gens[i]] = static_cast<int>(i);

  // k[gi] = least k with (m/z) y^k in the ideal, or kInfExp.
  std::vector<Exponent> kmin(gens.size(), kInfExp);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Monomial& m = gens[gi];
    if (m[zvar] <= 0) continue;
    Monomial base = m / Monomial::var(n, zvar);
    Exponent best = kInfExp;
    for (const Monomial& g : gens) {
      bool fits = true;
      for (int v = 0; v < n && fits; ++v)
        if (v != yvar && g[v] > base[v]) fits = false;
      if (!fits) continue;
      Exponent need = std::max<Exponent>(0, g[yvar] - base[yvar]);
      best = std::min(best, need);
    }
    if (best == 0)
      throw MathError("y_resolution: generator not minimal");
    kmin[gi] = best;
  }

  // key: (gen index, alpha mask, y flag)
  std::map<std::tuple<int, VarMask, int>, std::pair<int, int>> where;
  auto add_symbol = [&](int gi, VarMask amask, bool ext) {
    const Monomial& m = gens[gi];
    int lvl = __builtin_popcountll(amask) + (ext ? 1 : 0);
    if (static_cast<int>(f.levels.size()) <= lvl) f.levels.resize(lvl + 1);
    Monomial alpha = mask_to_monomial(n, amask);
    Exponent k = ext ? kmin[gi] : 0;
    Monomial md = m * alpha;
    if (ext) md = md * Monomial::var(n, yvar, k);
    f.levels[lvl].push_back({m, alpha, k, md});
    where[{gi, amask, ext ? 1 : 0}] = {
        lvl, static_cast<int>(f.levels[lvl].size()) - 1};
  };

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Monomial& m = gens[gi];
    int maxv = m.max_var();
    VarMask all;
    if (maxv >= yvar)
      all = t == 0 ? 0 : ((VarMask{1} << t) - 1);
    else
      all = maxv <= 0 ? 0 : ((VarMask{1} << maxv) - 1);
    bool has_ext = m[zvar] > 0 && kmin[gi] != kInfExp;
    for (VarMask a = 0;; a = (a - all) & all) {
      add_symbol(static_cast<int>(gi), a, false);
      if (has_ext) add_symbol(static_cast<int>(gi), a, true);
      if (a == all) break;
    }
  }

  f.diffs.assign(f.levels.size() > 0 ? f.levels.size() - 1 : 0, {});
  for (std::size_t lvl = 1; lvl < f.levels.size(); ++lvl)
    f.diffs[lvl - 1].resize(f.levels[lvl].size());

  auto lookup = [&](int gi, VarMask amask,
                    int ext) -> const std::pair<int, int>* {
    auto it = where.find({gi, amask, ext});
    return it == where.end() ? nullptr : &it->second;
  };

  for (const auto& [key, loc] : where) {
    auto [gi, amask, ext] = key;
    auto [lvl, idx] = loc;
    if (lvl == 0) continue;
    const Monomial& m = gens[gi];
    std::vector<int> avars = mask_vars(amask, n);
    int dega = static_cast<int>(avars.size());
    ColumnBuilder col;
    for (std::size_t tt = 0; tt < avars.size(); ++tt) {
      int v = avars[tt];
      Rational sign = (tt % 2 == 0) ? 1 : -1;
      VarMask rest = amask & ~(VarMask{1} << v);
      // alpha_i [m, alpha/alpha_i (y^k)]
      col.add(lookup(gi, rest, ext)->second, sign, Monomial::var(n, v));
      auto [beg, end] = beg_end_search(ideal, m * Monomial::var(n, v));
      int bi = gen_index.at(beg);
      const auto* target = lookup(bi, rest, ext);
      if (ext) {
        // the extended symbol must carry the same y power
        if (target != nullptr && kmin[bi] != kmin[gi]) target = nullptr;
      }
      if (target != nullptr && target->first == lvl - 1)
        col.add(target->second, -sign, end);
    }
    if (ext) {
      Rational sign = (dega % 2 == 0) ? 1 : -1;  // (-1)^{deg alpha}
      col.add(lookup(gi, amask, 0)->second, sign,
              Monomial::var(n, yvar, kmin[gi]));
      auto [beg, end] = beg_end_search(
          ideal, m * Monomial::var(n, yvar, kmin[gi]));
      int bi = gen_index.at(beg);
      const auto* target = lookup(bi, amask, 0);
      if (target != nullptr && target->first == lvl - 1)
        col.add(target->second, -sign, end);
    }
    f.diffs[lvl - 1][idx] = col.take();
  }
  return f;
}

FreeComplex taylor_resolution_on(int n, const std::vector<Monomial>& gens) {
  if (gens.size() > 20)
    throw LimitError("taylor_resolution: too many generators");
  FreeComplex f;
  f.n = n;
  const std::size_t s = gens.size();
  if (s == 0) return f;
  std::vector<std::vector<std::uint32_t>> by_level(s);
  std::map<std::uint32_t, std::pair<int, int>> where;
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    int lvl = __builtin_popcount(mask) - 1;
    by_level[lvl].push_back(mask);
  }
  f.levels.resize(s);
  for (std::size_t lvl = 0; lvl < s; ++lvl) {
    for (std::uint32_t mask : by_level[lvl]) {
      Monomial md = Monomial::unit(n);
      Monomial face_label = Monomial::unit(n);
      Monomial first_gen = Monomial::unit(n);
      bool first = true;
      for (std::size_t k = 0; k < s; ++k) {
        if (!((mask >> k) & 1)) continue;
        md = lcm(md, gens[k]);
        if (first) {
          first_gen = gens[k];
          first = false;
        }
      }
      f.levels[lvl].push_back({first_gen, face_label, 0, md});
      where[mask] = {static_cast<int>(lvl),
                     static_cast<int>(f.levels[lvl].size()) - 1};
    }
  }
  while (!f.levels.empty() && f.levels.back().empty()) f.levels.pop_back();
  f.diffs.assign(f.levels.size() > 0 ? f.levels.size() - 1 : 0, {});
  for (std::size_t lvl = 1; lvl < f.levels.size(); ++lvl)
    f.diffs[lvl - 1].resize(f.levels[lvl].size());
  for (const auto& [mask, loc] : where) {
    auto [lvl, idx] = loc;
    if (lvl == 0) continue;
    Monomial md = Monomial::unit(n);
    for (std::size_t k = 0; k < s; ++k)
      if ((mask >> k) & 1) md = lcm(md, gens[k]);
    ColumnBuilder col;
    int pos = 0;
    for (std::size_t k = 0; k < s; ++k) {
      if (!((mask >> k) & 1)) continue;
      ++pos;
      std::uint32_t rest = mask & ~(1u << k);
      Monomial sub = Monomial::unit(n);
      for (std::size_t l = 0; l < s; ++l)
        if ((rest >> l) & 1) sub = lcm(sub, gens[l]);
      Rational sign = (pos % 2 == 1) ? 1 : -1;
      col.add(where.at(rest).second, sign, md / sub);
    }
    f.diffs[lvl - 1][idx] = col.take();
  }
  return f;
}

FreeComplex taylor_resolution(const MonomialIdeal& ideal) {
  return taylor_resolution_on(ideal.nvars(), ideal.gens());
}

int rational_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::map<int, long> reduced_homology_dims(const std::vector<VarMask>& faces) {
  std::map<int, long> out;
  if (faces.empty()) return out;
  int maxdim = -1;
  std::map<int, std::vector<VarMask>> by_dim;
  std::map<int, std::map<VarMask, int>> index;
  for (VarMask face : faces) {
    int d = __builtin_popcountll(face) - 1;
    index[d][face] = 0;
    maxdim = std::max(maxdim, d);
  }
  for (auto& [d, m] : index) {
    int i = 0;
    for (auto& [face, idx] : m) {
      idx = i++;
      by_dim[d].push_back(face);
    }
  }
  // boundary matrices: rows dim d-1, cols dim d
  std::map<int, int> ranks;
  for (int d = 0; d <= maxdim; ++d) {
    const auto& cols = by_dim[d];
    const auto& rowsix = index[d - 1];
    std::vector<std::vector<Rational>> mat(
        rowsix.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      VarMask face = cols[c];
      int pos = 0;
      for (int v = 0; v < 64; ++v) {
        if (!((face >> v) & 1)) continue;
        VarMask sub = face & ~(VarMask{1} << v);
        auto it = rowsix.find(sub);
        if (it == rowsix.end())
          throw MathError("simplicial complex not subset-closed");
        mat[it->second][c] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    ranks[d] = rational_rank(std::move(mat));
  }
  for (int d = -1; d <= maxdim; ++d) {
    long dim_c = static_cast<long>(by_dim.count(d) ? by_dim[d].size() : 0);
    long rk_d = d >= 0 ? ranks[d] : 0;
    long rk_up = (d + 1 <= maxdim) ? ranks[d + 1] : 0;
    long h = dim_c - rk_d - rk_up;
    if (h != 0) out[d] = h;
  }
  return out;
}

BettiTable koszul_betti(const MonomialIdeal& ideal, Exponent bound) {
  if (bound < ideal.max_gen_degree())
    throw MathError("koszul_betti: bound below the maximal generator degree");
  BettiTable t;
  if (ideal.is_zero()) return t;
  const int n = ideal.nvars();
  // Strands above the lcm of the generators are cones, so the scan is
  // confined to the box below it.  Membership over the whole box is filled
  // once by an upward-closure sweep.
  Monomial cap = ideal.lcm_of_gens();
  std::vector<Exponent> radix(n, 1);
  std::size_t box = 1;
  for (int i = 0; i < n; ++i) {
    radix[i] = static_cast<Exponent>(box);
    box *= static_cast<std::size_t>(cap[i] + 1);
  }
  auto rank_of_vec = [&](const std::vector<Exponent>& e) {
    std::size_t r = 0;
    for (int i = 0; i < n; ++i)
      r += static_cast<std::size_t>(e[i]) * static_cast<std::size_t>(radix[i]);
    return r;
  };
  std::vector<char> member(box, 0);
  for (const Monomial& g : ideal.gens())
    if (g.divides(cap)) member[rank_of_vec(g.exponents())] = 1;
  {
    std::vector<Exponent> e(n, 0);
    for (std::size_t r = 0; r < box; ++r) {
      if (!member[r]) {
        for (int i = 0; i < n && !member[r]; ++i)
          if (e[i] > 0 && member[r - static_cast<std::size_t>(radix[i])])
            member[r] = 1;
      }
      for (int i = 0; i < n; ++i) {
        if (++e[i] <= cap[i]) break;
        e[i] = 0;
      }
    }
  }
  std::vector<Exponent> b(n, 0);
  std::function<void(int, Exponent)> rec = [&](int i, Exponent left) {
    if (i == n) {
      if (!member[rank_of_vec(b)]) return;
      Monomial bm{std::vector<Exponent>(b)};
      VarMask verts = bm.support();
      std::vector<VarMask> faces;
      std::vector<Exponent> sub(b);
      for (VarMask w = verts;; w = (w - 1) & verts) {
        for (int v = 0; v < n; ++v)
          sub[v] = b[v] - (((w >> v) & 1) ? 1 : 0);
        if (member[rank_of_vec(sub)]) faces.push_back(w);
        if (w == 0) break;
      }
      // faces is automatically subset-closed (dividing out more of a
      // squarefree part keeps membership upward); homology by dimension.
      for (const auto& [d, h] : reduced_homology_dims(faces))
        t.add(d + 1, bm, h);
      return;
    }
    for (Exponent v = 0; v <= std::min<Exponent>(cap[i], left); ++v) {
      b[i] = v;
      rec(i + 1, left - v);
    }
    b[i] = 0;
  };
  rec(0, bound);
  return t;
}

namespace {

struct Strand {
  // per level: indices of symbols whose multidegree divides b
  std::vector<std::vector<int>> members;
  std::vector<std::map<int, int>> pos;  // symbol index -> strand position
};

Strand strand_of(const FreeComplex& f, const Monomial& b) {
  Strand s;
  s.members.resize(f.levels.size());
  s.pos.resize(f.levels.size());
  for (std::size_t lvl = 0; lvl < f.levels.size(); ++lvl) {
    for (std::size_t i = 0; i < f.levels[lvl].size(); ++i) {
      if (f.levels[lvl][i].multidegree.divides(b)) {
        s.pos[lvl][static_cast<int>(i)] =
            static_cast<int>(s.members[lvl].size());
        s.members[lvl].push_back(static_cast<int>(i));
      }
    }
  }
  return s;
}

std::vector<std::vector<Rational>> strand_matrix(const FreeComplex& f,
                                                 const Strand& s, int lvl) {
  // matrix of diffs[lvl-1] : level lvl -> level lvl-1 restricted to strand
  std::vector<std::vector<Rational>> m(
      s.members[lvl - 1].size(),
      std::vector<Rational>(s.members[lvl].size(), 0));
  for (std::size_t c = 0; c < s.members[lvl].size(); ++c) {
    int col = s.members[lvl][c];
    for (const DiffEntry& e : f.diffs[lvl - 1][col]) {
      auto it = s.pos[lvl - 1].find(e.row);
      if (it == s.pos[lvl - 1].end())
        throw MathError("strand row outside strand (inhomogeneous entry?)");
      m[it->second][c] = e.coeff;
    }
  }
  return m;
}

bool check_homogeneous(const FreeComplex& f, std::string* detail) {
  for (std::size_t lvl = 0; lvl + 1 < f.levels.size(); ++lvl) {
    for (std::size_t c = 0; c < f.diffs[lvl].size(); ++c) {
      for (const DiffEntry& e : f.diffs[lvl][c]) {
        const Monomial& colmd = f.levels[lvl + 1][c].multidegree;
        const Monomial& rowmd = f.levels[lvl][e.row].multidegree;
        if (e.mono * rowmd != colmd) {
          if (detail)
            *detail = "inhomogeneous entry at level " + std::to_string(lvl + 1);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_d2(const FreeComplex& f) {
  VerifyReport rep;
  rep.homogeneous = check_homogeneous(f, &rep.detail);
  if (!rep.homogeneous) return rep;
  // augmentation composed with d_1: coefficients must cancel columnwise
  if (f.levels.size() >= 2) {
    for (std::size_t c = 0; c < f.diffs[0].size(); ++c) {
      Rational sum = 0;
      for (const DiffEntry& e : f.diffs[0][c]) sum += e.coeff;
      if (sum != 0) {
        rep.d2_ok = false;
        rep.detail = "augmentation of d_1 does not vanish at level-1 column " +
                     std::to_string(c);
        return rep;
      }
    }
  }
  for (std::size_t lvl = 2; lvl < f.levels.size(); ++lvl) {
    for (std::size_t c = 0; c < f.diffs[lvl - 1].size(); ++c) {
      std::map<int, Rational> acc;
      for (const DiffEntry& mid : f.diffs[lvl - 1][c])
        for (const DiffEntry& low : f.diffs[lvl - 2][mid.row])
          acc[low.row] += mid.coeff * low.coeff;
      for (const auto& [row, v] : acc) {
        if (v != 0) {
          rep.d2_ok = false;
          rep.detail = "d o d != 0: level " + std::to_string(lvl) +
                       " column " + std::to_string(c) + " row " +
                       std::to_string(row);
          return rep;
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_exactness(const FreeComplex& f, Exponent bound,
                              const MonomialIdeal* intended) {
  VerifyReport rep;
  rep.bound = bound;
  rep.homogeneous = check_homogeneous(f, &rep.detail);
  if (!rep.homogeneous) return rep;
  if (f.levels.empty()) return rep;
  const int n = f.n;
  MonomialIdeal target = intended ? *intended : f.target_ideal();
  // componentwise cap: beyond it both the strands and the membership tests
  // repeat their values at the capped representative
  std::vector<Exponent> cap(n, 0);
  for (const auto& lvl : f.levels)
    for (const auto& s : lvl)
      for (int i = 0; i < n; ++i)
        cap[i] = std::max(cap[i], s.multidegree[i]);
  for (const Monomial& g : target.gens())
    for (int i = 0; i < n; ++i) cap[i] = std::max(cap[i], g[i]);
  std::vector<Exponent> b(n, 0);
  std::function<void(int, Exponent)> rec = [&](int i, Exponent left) {
    if (i == n) {
      Monomial bm{std::vector<Exponent>(b)};
      Strand s = strand_of(f, bm);
      bool any = false;
      for (const auto& mem : s.members) any = any || !mem.empty();
      bool member = target.contains(bm);
      if ((s.members[0].empty() ? 0 : 1) != (member ? 1 : 0))
        rep.coker_mismatch.push_back(bm);
      if (!any) return;
      ++rep.strands_checked;
      std::vector<int> ranks(f.levels.size() + 1, 0);
      for (std::size_t lvl = 1; lvl < f.levels.size(); ++lvl)
        if (!s.members[lvl].empty())
          ranks[lvl] = rational_rank(strand_matrix(f, s, lvl));
      // level 0: augmentation has rank 1 iff the strand is nonempty
      int aug_rank = s.members[0].empty() ? 0 : 1;
      for (std::size_t lvl = 0; lvl < f.levels.size(); ++lvl) {
        long dim = static_cast<long>(s.members[lvl].size());
        long d_out = (lvl == 0) ? aug_rank : ranks[lvl];
        long d_in = (lvl + 1 < f.levels.size() + 1) ? ranks[lvl + 1] : 0;
        long h = dim - d_out - d_in;
        if (h != 0)
          rep.nonzero_homology.push_back({static_cast<int>(lvl), bm, h});
      }
      return;
    }
    for (Exponent v = 0; v <= std::min<Exponent>(cap[i], left); ++v) {
      b[i] = v;
      rec(i + 1, left - v);
    }
    b[i] = 0;
  };
  rec(0, bound);
  return rep;
}

}  // namespace qborel
