#include <algorithm>
#include <functional>
#include <map>

#include "qborel/resolution.hpp"

namespace qborel {

namespace {

// Any solution of M x = rhs over the rationals (free variables set to 0);
// throws when inconsistent.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    std::swap(rhs[r], rhs[pr]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int cc = c; cc < cols; ++cc) m[i][cc] -= f * m[r][cc];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (rhs[i] != 0) throw MathError("mapping cone lift: inconsistent solve");
  std::vector<Rational> x(cols, 0);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / m[i][pivot_col[i]];
  return x;
}

struct LevelPos {
  int level;
  int index;
};

// Direct sum A ++ B; B's symbols are appended after A's at every level.
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b,
                       std::vector<int>& a_sizes) {
  FreeComplex f;
  f.n = a.n ? a.n : b.n;
  std::size_t nlevels = std::max(a.levels.size(), b.levels.size());
  f.levels.resize(nlevels);
  a_sizes.assign(nlevels, 0);
  for (std::size_t i = 0; i < nlevels; ++i) {
    if (i < a.levels.size()) f.levels[i] = a.levels[i];
    a_sizes[i] = static_cast<int>(f.levels[i].size());
    if (i < b.levels.size())
      f.levels[i].insert(f.levels[i].end(), b.levels[i].begin(),
                         b.levels[i].end());
  }
  while (!f.levels.empty() && f.levels.back().empty()) f.levels.pop_back();
  f.diffs.assign(f.levels.size() > 0 ? f.levels.size() - 1 : 0, {});
  for (std::size_t lvl = 0; lvl + 1 < f.levels.size(); ++lvl) {
    f.diffs[lvl].resize(f.levels[lvl + 1].size());
    if (lvl + 1 < a.levels.size() && lvl < a.diffs.size()) {
      for (std::size_t c = 0; c < a.diffs[lvl].size(); ++c)
        f.diffs[lvl][c] = a.diffs[lvl][c];
    }
    if (lvl + 1 < b.levels.size() && lvl < b.diffs.size()) {
      for (std::size_t c = 0; c < b.diffs[lvl].size(); ++c) {
        std::vector<DiffEntry> col = b.diffs[lvl][c];
        for (DiffEntry& e : col) e.row += a_sizes[lvl];
        f.diffs[lvl][a_sizes[lvl + 1] + c] = std::move(col);
      }
    }
  }
  return f;
}

// Mapping cone of the comparison map K -> AB lifting kappa |-> (+kappa in
// the A part, -kappa in the B part); AB must be exact (a resolution) for the
// lifts to exist.  a_sizes gives the A-part width of each AB level.
FreeComplex mapping_cone(const FreeComplex& ab, const std::vector<int>& a_sizes,
                         const FreeComplex& k) {
  FreeComplex f;
  f.n = ab.n;
  const std::size_t cone_levels =
      std::max(ab.levels.size(), k.levels.size() + 1);
  f.levels.resize(cone_levels);
  std::vector<int> ab_width(cone_levels, 0);
  for (std::size_t i = 0; i < cone_levels; ++i) {
    if (i < ab.levels.size()) f.levels[i] = ab.levels[i];
    ab_width[i] = static_cast<int>(f.levels[i].size());
    if (i >= 1 && i - 1 < k.levels.size())
      f.levels[i].insert(f.levels[i].end(), k.levels[i - 1].begin(),
                         k.levels[i - 1].end());
  }
  while (!f.levels.empty() && f.levels.back().empty()) f.levels.pop_back();

  // phi[i][kappa] = column over AB level i expressing the lift of the K
  // level-i symbol kappa.
  std::vector<std::vector<std::vector<DiffEntry>>> phi(k.levels.size());

  // Level 0: kappa has multidegree equal to a generator of the intersection
  // ideal; express it over the first dividing level-0 symbol on each side.
  if (!k.levels.empty()) {
    phi[0].resize(k.levels[0].size());
    for (std::size_t c = 0; c < k.levels[0].size(); ++c) {
      const Monomial& g = k.levels[0][c].multidegree;
      int apos = -1, bpos = -1;
      for (int i = 0; i < ab_width[0] && apos < 0; ++i)
        if (i < a_sizes[0] && ab.levels[0][i].multidegree.divides(g)) apos = i;
      for (int i = a_sizes[0]; i < ab_width[0] && bpos < 0; ++i)
        if (ab.levels[0][i].multidegree.divides(g)) bpos = i;
      if (apos < 0 || bpos < 0)
        throw MathError("mapping cone: intersection generator not covered");
      phi[0][c].push_back(
          {apos, 1, g / ab.levels[0][apos].multidegree});
      phi[0][c].push_back(
          {bpos, -1, g / ab.levels[0][bpos].multidegree});
    }
  }

  // Higher lifts by per-multidegree linear solves: d_AB(phi_i kappa) =
  // phi_{i-1}(d_K kappa).
  for (std::size_t i = 1; i < k.levels.size(); ++i) {
    phi[i].resize(k.levels[i].size());
    for (std::size_t c = 0; c < k.levels[i].size(); ++c) {
      const Monomial& b = k.levels[i][c].multidegree;
      // rhs over AB level i-1
      std::map<int, Rational> rhs_map;
      for (const DiffEntry& e : k.diffs[i - 1][c]) {
        for (const DiffEntry& p : phi[i - 1][e.row]) {
          // entry monomial: e.mono * p.mono relative to b
          rhs_map[p.row] += e.coeff * p.coeff;
        }
      }
      // strand of AB at b for levels i and i-1
      std::vector<int> cols_i, rows_im1;
      std::map<int, int> rowpos;
      if (i < ab.levels.size())
        for (std::size_t s = 0; s < ab.levels[i].size(); ++s)
          if (ab.levels[i][s].multidegree.divides(b))
            cols_i.push_back(static_cast<int>(s));
      for (std::size_t s = 0; s < ab.levels[i - 1].size(); ++s)
        if (ab.levels[i - 1][s].multidegree.divides(b)) {
          rowpos[static_cast<int>(s)] = static_cast<int>(rows_im1.size());
          rows_im1.push_back(static_cast<int>(s));
        }
      std::vector<std::vector<Rational>> mat(
          rows_im1.size(), std::vector<Rational>(cols_i.size(), 0));
      for (std::size_t cc = 0; cc < cols_i.size(); ++cc)
        for (const DiffEntry& e : ab.diffs[i - 1][cols_i[cc]]) {
          auto it = rowpos.find(e.row);
          if (it == rowpos.end())
            throw MathError("mapping cone: entry row outside strand");
          mat[it->second][cc] = e.coeff;
        }
      std::vector<Rational> rhs(rows_im1.size(), 0);
      for (const auto& [row, v] : rhs_map) {
        auto it = rowpos.find(row);
        if (it == rowpos.end()) {
          if (v != 0)
            throw MathError("mapping cone: rhs row outside strand");
          continue;
        }
        rhs[it->second] = v;
      }
      std::vector<Rational> x = solve_linear(std::move(mat), std::move(rhs));
      for (std::size_t cc = 0; cc < cols_i.size(); ++cc) {
        if (x[cc] == 0) continue;
        phi[i][c].push_back(
            {cols_i[cc], x[cc],
             b / ab.levels[i][cols_i[cc]].multidegree});
      }
    }
  }

  // Assemble the cone differential.
  f.diffs.assign(f.levels.size() > 0 ? f.levels.size() - 1 : 0, {});
  for (std::size_t lvl = 0; lvl + 1 < f.levels.size(); ++lvl) {
    f.diffs[lvl].resize(f.levels[lvl + 1].size());
    if (lvl + 1 < ab.levels.size() && lvl < ab.diffs.size())
      for (std::size_t c = 0; c < ab.diffs[lvl].size(); ++c)
        f.diffs[lvl][c] = ab.diffs[lvl][c];
    // K part at cone level lvl+1 = K level lvl
    if (lvl < k.levels.size()) {
      for (std::size_t c = 0; c < k.levels[lvl].size(); ++c) {
        std::vector<DiffEntry> col = phi[lvl][c];
        if (lvl >= 1) {
          for (const DiffEntry& e : k.diffs[lvl - 1][c])
            col.push_back({ab_width[lvl] + e.row, -e.coeff, e.mono});
        }
        f.diffs[lvl][ab_width[lvl + 1] + c] = std::move(col);
      }
    }
  }
  return f;
}

FreeComplex principal_free_module(int n, const Monomial& m) {
  FreeComplex f;
  f.n = n;
  f.levels.resize(1);
  f.levels[0].push_back({m, Monomial::unit(n), 0, m});
  return f;
}

}  // namespace

FreeComplex lq_resolution(const MonomialIdeal& ideal, LqOrder order) {
  LinearQuotients lq = linear_quotients(ideal, order);
  if (!lq.ok)
    throw MathError("no linear quotients at index " +
                    std::to_string(lq.fail_index));
  const int n = ideal.nvars();
  FreeComplex acc;
  acc.n = n;
  for (std::size_t j = 0; j < lq.order.size(); ++j) {
    FreeComplex gpart = principal_free_module(n, lq.order[j]);
    if (j == 0) {
      acc = gpart;
      continue;
    }
    // Koszul resolution of m_j * (quotient variables), labeled by subsets.
    const auto& vars = lq.quotient_vars[j];
    FreeComplex k;
    k.n = n;
    if (!vars.empty()) {
      std::map<std::uint32_t, std::pair<int, int>> where;
      k.levels.resize(vars.size());
      for (std::uint32_t mask = 1; mask < (1u << vars.size()); ++mask) {
        int lvl = __builtin_popcount(mask) - 1;
        Monomial face = Monomial::unit(n);
        for (std::size_t v = 0; v < vars.size(); ++v)
          if ((mask >> v) & 1) face = face * Monomial::var(n, vars[v]);
        k.levels[lvl].push_back({lq.order[j], face, 0, lq.order[j] * face});
        where[mask] = {lvl, static_cast<int>(k.levels[lvl].size()) - 1};
      }
      k.diffs.assign(k.levels.size() - 1, {});
      for (std::size_t lvl = 1; lvl < k.levels.size(); ++lvl)
        k.diffs[lvl - 1].resize(k.levels[lvl].size());
      for (const auto& [mask, loc] : where) {
        auto [lvl, idx] = loc;
        if (lvl == 0) continue;
        int pos = 0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
          if (!((mask >> v) & 1)) continue;
          ++pos;
          std::uint32_t rest = mask & ~(1u << v);
          k.diffs[lvl - 1][idx].push_back(
              {where.at(rest).second, (pos % 2 == 1) ? 1 : -1,
               Monomial::var(n, vars[v])});
        }
      }
    }
    std::vector<int> a_sizes;
    FreeComplex ab = direct_sum(acc, gpart, a_sizes);
    acc = mapping_cone(ab, a_sizes, k);
  }
  // The lift solves pick arbitrary preimages, which can leave removable
  // constant entries; eliminating them gives the minimal resolution the
  // linear quotients promise.
  return cancel_units(std::move(acc));
}

FreeComplex cancel_units(FreeComplex f) {
  auto find_unit = [&](int& out_lvl, int& out_col,
                       int& out_row) -> bool {
    for (std::size_t lvl = 0; lvl < f.diffs.size(); ++lvl) {
      for (std::size_t c = 0; c < f.diffs[lvl].size(); ++c) {
        for (const DiffEntry& e : f.diffs[lvl][c]) {
          if (e.mono.is_unit() && e.coeff != 0) {
            out_lvl = static_cast<int>(lvl);
            out_col = static_cast<int>(c);
            out_row = e.row;
            return true;
          }
        }
      }
    }
    return false;
  };
  int lvl, col, row;
  while (find_unit(lvl, col, row)) {
    // pivot entry value
    Rational pivot;
    for (const DiffEntry& e : f.diffs[lvl][col])
      if (e.row == row && e.mono.is_unit()) pivot = e.coeff;
    // Schur update on the remaining columns of diffs[lvl]
    std::vector<DiffEntry> pivot_col = f.diffs[lvl][col];
    for (std::size_t c = 0; c < f.diffs[lvl].size(); ++c) {
      if (static_cast<int>(c) == col) continue;
      Rational b_coeff = 0;
      Monomial b_mono;
      for (const DiffEntry& e : f.diffs[lvl][c])
        if (e.row == row) {
          b_coeff = e.coeff;
          b_mono = e.mono;
        }
      if (b_coeff == 0) continue;
      std::map<int, std::pair<Rational, Monomial>> acc;
      for (const DiffEntry& e : f.diffs[lvl][c])
        if (e.row != row) acc[e.row] = {e.coeff, e.mono};
      for (const DiffEntry& e : pivot_col) {
        if (e.row == row) continue;
        Rational delta = b_coeff * e.coeff / pivot;
        Monomial mono = b_mono * e.mono;
        auto it = acc.find(e.row);
        if (it == acc.end()) {
          acc[e.row] = {-delta, mono};
        } else {
          if (it->second.second != mono)
            throw MathError("cancel_units: inhomogeneous update");
          it->second.first -= delta;
        }
      }
      std::vector<DiffEntry> rebuilt;
      for (const auto& [r, cm] : acc)
        if (cm.first != 0) rebuilt.push_back({r, cm.first, cm.second});
      f.diffs[lvl][c] = std::move(rebuilt);
    }
    // Remove column `col` at level lvl+1 and row `row` at level lvl.
    f.levels[lvl + 1].erase(f.levels[lvl + 1].begin() + col);
    f.diffs[lvl].erase(f.diffs[lvl].begin() + col);
    f.levels[lvl].erase(f.levels[lvl].begin() + row);
    for (auto& column : f.diffs[lvl]) {
      std::vector<DiffEntry> kept;
      for (DiffEntry& e : column) {
        if (e.row == row) continue;
        if (e.row > row) e.row -= 1;
        kept.push_back(e);
      }
      column = std::move(kept);
    }
    // diffs[lvl+1]: drop the row `col` (pointing at the removed symbol)
    if (lvl + 1 < static_cast<int>(f.diffs.size())) {
      for (auto& column : f.diffs[lvl + 1]) {
        std::vector<DiffEntry> kept;
        for (DiffEntry& e : column) {
          if (e.row == col) continue;
          if (e.row > col) e.row -= 1;
          kept.push_back(e);
        }
        column = std::move(kept);
      }
    }
    // diffs[lvl-1]: drop the column `row`
    if (lvl - 1 >= 0) {
      f.diffs[lvl - 1].erase(f.diffs[lvl - 1].begin() + row);
    }
    while (!f.levels.empty() && f.levels.back().empty()) {
      f.levels.pop_back();
      if (!f.diffs.empty()) f.diffs.pop_back();
    }
  }
  return f;
}

namespace {

struct TruncState {
  const Poset& q;
  bool cancel;
  long budget = 60000;  // weighted by generator counts, not just nodes
};

FreeComplex truncated_rec(TruncState& st, const std::vector<Monomial>& gen_list,
                          Exponent d) {
  if (--st.budget < 0)
    throw LimitError("truncated_resolution: recursion budget exceeded");
  const int n = st.q.size();
  // Step 1: delete generators of degree above the cutoff.
  std::vector<Monomial> list;
  for (const Monomial& g : gen_list)
    if (g.degree() <= d) list.push_back(g);
  std::sort(list.begin(), list.end());
  FreeComplex out;
  out.n = n;
  if (list.empty()) return out;
  // Step 2: a principal input is resolved by its linear quotients.
  if (list.size() == 1) {
    MonomialIdeal expansion = q_closure(st.q, {list[0]});
    st.budget -= 4 * static_cast<long>(expansion.gens().size());
    if (st.budget < 0)
      throw LimitError("truncated_resolution: recursion budget exceeded");
    return lq_resolution(expansion, LqOrder::DescendingRevlex);
  }
  Monomial m = list.front();  // minimal degree, canonical tie-break
  std::vector<Monomial> rest(list.begin() + 1, list.end());
  // Step 3: the intersection, generator by generator.
  std::vector<Monomial> k_list;
  for (const Monomial& t : rest) {
    QBorelIdeal meet = intersect_principal(st.q, t, m);
    st.budget -= static_cast<long>(meet.expansion.gens().size());
    for (const Monomial& u : meet.q_generators) k_list.push_back(u);
  }
  if (st.budget < 0)
    throw LimitError("truncated_resolution: recursion budget exceeded");
  FreeComplex g =
      lq_resolution(q_closure(st.q, {m}), LqOrder::DescendingRevlex);
  // Step 4: assemble the Mayer-Vietoris mapping cone.  The cone places the
  // intersection complex one homological level up, so its certificate must
  // reach one degree further: the K sub-call runs at cutoff d + 1 (its
  // level-0 defect then sits at degrees > d + 1 and lands outside the
  // parent's window).  Sub-complexes are still exact only up to their
  // cutoffs; when a lift strand above them turns out inconsistent, the node
  // is rebuilt with a higher cutoff (the resolved ideal keeps agreeing with
  // the input below the original one).
  for (Exponent local = d;; ++local) {
    if (local > d + 16)
      throw LimitError("truncated_resolution: cutoff escalation exceeded");
    try {
      FreeComplex h = truncated_rec(st, rest, local);
      FreeComplex k = truncated_rec(st, k_list, local + 1);
      std::vector<int> a_sizes;
      FreeComplex ab = direct_sum(h, g, a_sizes);
      FreeComplex cone = mapping_cone(ab, a_sizes, k);
      if (st.cancel) cone = cancel_units(std::move(cone));
      return cone;
    } catch (const LimitError&) {
      throw;
    } catch (const MathError&) {
      continue;
    }
  }
}

}  // namespace

FreeComplex truncated_resolution(const Poset& q,
                                 const std::vector<Monomial>& q_gens,
                                 Exponent d, bool cancel) {
  Exponent mindeg = -1;
  for (const Monomial& g : q_gens)
    if (mindeg < 0 || g.degree() < mindeg) mindeg = g.degree();
  if (!q_gens.empty() && d < mindeg)
    throw MathError("truncated_resolution: cutoff below minimal degree");
  TruncState st{q, cancel};
  return truncated_rec(st, q_gens, d);
}

}  // namespace qborel
