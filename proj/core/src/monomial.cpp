#include "qborel/monomial.hpp"

#include <algorithm>

namespace qborel {

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent x : e_) {
    if (__builtin_add_overflow(d, x, &d)) throw MathError("degree overflow");
  }
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x <= 1; });
}

bool Monomial::is_pure_power() const {
  return support_size() == 1;
}

VarMask Monomial::support() const {
  VarMask m = 0;
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > 0) m |= (VarMask{1} << i);
  return m;
}

int Monomial::support_size() const {
  int c = 0;
  for (Exponent x : e_) c += (x > 0);
  return c;
}

int Monomial::max_var() const {
  for (int i = nvars() - 1; i >= 0; --i)
    if (e_[i] > 0) return i;
  return -1;
}

int Monomial::min_var() const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw MathError("variable count mismatch");
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw MathError("variable count mismatch");
  std::vector<Exponent> r(e_);
  for (int i = 0; i < nvars(); ++i) {
    if (__builtin_add_overflow(r[i], other.e_[i], &r[i]))
      throw MathError("exponent overflow");
  }
  return Monomial(std::move(r));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw MathError("monomial division is not exact");
  std::vector<Exponent> r(e_);
  for (int i = 0; i < nvars(); ++i) r[i] -= other.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::with_exponent(int i, Exponent k) const {
  std::vector<Exponent> r(e_);
  r.at(i) = k;
  return Monomial(std::move(r));
}

Monomial Monomial::swap_var(int from_j, int to_i) const {
  if (e_.at(from_j) <= 0) throw MathError("swap_var: variable does not divide");
  std::vector<Exponent> r(e_);
  r[from_j] -= 1;
  r[to_i] += 1;
  return Monomial(std::move(r));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw MathError("variable count mismatch");
  std::vector<Exponent> r(a.e_);
  for (int i = 0; i < a.nvars(); ++i) r[i] = std::min(r[i], b.e_[i]);
  return Monomial(std::move(r));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw MathError("variable count mismatch");
  std::vector<Exponent> r(a.e_);
  for (int i = 0; i < a.nvars(); ++i) r[i] = std::max(r[i], b.e_[i]);
  return Monomial(std::move(r));
}

bool Monomial::canonical_less(const Monomial& a, const Monomial& b) {
  Exponent da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Descending reverse-lex within a degree: a > b in revlex iff the last
  // nonzero entry of (a - b) is negative.
  for (int i = a.nvars() - 1; i >= 0; --i) {
    Exponent diff = a.e_[i] - b.e_[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent x : e_) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (is_unit()) return "1";
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s;
}

namespace {
void enumerate_rec(int n, int i, Exponent left, std::vector<Exponent>& cur,
                   const std::function<void(const Monomial&)>& fn) {
  if (i == n - 1) {
    cur[i] = left;
    fn(Monomial(cur));
    cur[i] = 0;
    return;
  }
  for (Exponent k = 0; k <= left; ++k) {
    cur[i] = k;
    enumerate_rec(n, i + 1, left - k, cur, fn);
  }
  cur[i] = 0;
}
}  // namespace

void for_each_monomial_of_degree(int n, Exponent d,
                                 const std::function<void(const Monomial&)>& fn) {
  if (n == 0) {
    if (d == 0) fn(Monomial(std::vector<Exponent>{}));
    return;
  }
  std::vector<Exponent> cur(n, 0);
  enumerate_rec(n, 0, d, cur, fn);
}

}  // namespace qborel
