#include "qborel/ideal.hpp"

#include <algorithm>

namespace qborel {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.nvars() != n) throw MathError("generator has wrong variable count");
  MonomialIdeal I(n);
  I.gens_ = minimalize(std::move(gens));
  return I;
}

Exponent MonomialIdeal::max_gen_degree() const {
  Exponent d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

Exponent MonomialIdeal::min_gen_degree() const {
  if (gens_.empty()) return 0;
  return gens_.front().degree();  // canonical order is degree-first
}

bool MonomialIdeal::is_equigenerated() const {
  return gens_.empty() || gens_.front().degree() == gens_.back().degree();
}

Monomial MonomialIdeal::lcm_of_gens() const {
  Monomial l = Monomial::unit(n_);
  for (const Monomial& g : gens_) l = lcm(l, g);
  return l;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_) {
    if (g.degree() > m.degree()) return false;  // sorted by degree
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::str(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str(names);
  }
  return s + ")";
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g(a.gens());
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::make(a.nvars(), std::move(g));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  g.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& x : a.gens())
    for (const Monomial& y : b.gens()) g.push_back(x * y);
  return MonomialIdeal::make(a.nvars(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, Exponent k) {
  if (k < 0) throw MathError("negative ideal power");
  MonomialIdeal r = MonomialIdeal::unit_ideal(a.nvars());
  for (Exponent i = 0; i < k; ++i) r = product(r, a);
  return r;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  g.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& x : a.gens())
    for (const Monomial& y : b.gens()) g.push_back(lcm(x, y));
  return MonomialIdeal::make(a.nvars(), std::move(g));
}

MonomialIdeal quotient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (b.is_zero()) return MonomialIdeal::unit_ideal(a.nvars());
  bool first = true;
  MonomialIdeal result(a.nvars());
  for (const Monomial& h : b.gens()) {
    std::vector<Monomial> g;
    g.reserve(a.gens().size());
    for (const Monomial& x : a.gens()) g.push_back(x / gcd(x, h));
    MonomialIdeal part = MonomialIdeal::make(a.nvars(), std::move(g));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal saturate_var(const MonomialIdeal& a, int i) {
  std::vector<Monomial> g;
  g.reserve(a.gens().size());
  for (const Monomial& x : a.gens()) g.push_back(x.with_exponent(i, 0));
  return MonomialIdeal::make(a.nvars(), std::move(g));
}

long graded_count(const MonomialIdeal& a, Exponent d) {
  if (d < 0) throw MathError("graded_count: negative degree");
  long count = 0;
  for_each_monomial_of_degree(a.nvars(), d, [&](const Monomial& m) {
    if (a.contains(m)) ++count;
  });
  return count;
}

std::vector<int> MonomialPrime::vars() const {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (contains_var(i)) v.push_back(i);
  return v;
}

Exponent MonomialPrime::count_in(const Monomial& m) const {
  Exponent c = 0;
  for (int i = 0; i < n; ++i)
    if (contains_var(i)) c += m[i];
  return c;
}

bool MonomialPrime::operator<(const MonomialPrime& o) const {
  if (size() != o.size()) return size() < o.size();
  return vars() < o.vars();
}

std::string MonomialPrime::str(const std::vector<std::string>& names) const {
  std::string s = "(";
  bool first = true;
  for (int i : vars()) {
    if (!first) s += ",";
    s += names.at(i);
    first = false;
  }
  return s + ")";
}

MonomialIdeal prime_power(const MonomialPrime& p, Exponent a) {
  if (a < 0) throw MathError("negative prime power");
  if (a == 0) return MonomialIdeal::unit_ideal(p.n);
  if (p.empty()) return MonomialIdeal::zero(p.n);
  std::vector<Monomial> vars;
  for (int i : p.vars()) vars.push_back(Monomial::var(p.n, i));
  MonomialIdeal prime = MonomialIdeal::make(p.n, vars);
  return power(prime, a);
}

}  // namespace qborel
