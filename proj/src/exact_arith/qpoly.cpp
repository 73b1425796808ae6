#include "qjfrac/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qjfrac/errors.hpp"

namespace qjfrac {

namespace {

using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b (deg a >= deg b), in place on a.
void pseudo_remainder(IntPoly& a, const IntPoly& b) {
  const size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
}

IntPoly primitive_gcd(IntPoly a, IntPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    pseudo_remainder(a, b);
    make_primitive(a);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& QPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("QPoly::leading: zero polynomial");
  return coeffs_.back();
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  QPoly r = *this;
  if (c != 1) {
    for (auto& x : r.coeffs_) x *= c;
  }
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(static_cast<size_t>(k), Rational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPoly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly operator-(const QPoly& a) { return a.scaled(-1); }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / b.leading();
  const size_t db = bc.size() - 1;
  for (size_t k = quo.size(); k-- > 0;) {
    const Rational t = rem[k + db] * inv_lead;
    quo[k] = t;
    if (t == 0) continue;
    for (size_t i = 0; i <= db; ++i) rem[k + i] -= t * bc[i];
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

std::pair<Rational, std::vector<Integer>> primitive_part(const QPoly& a) {
  if (a.is_zero()) return {Rational(0), {}};
  Integer l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    Integer n = c.get_num() * (l / c.get_den());
    v.push_back(std::move(n));
  }
  Integer g = content(v);
  if (v.back() < 0) g = -g;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {make_rational(g, l), std::move(v)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(1);
  auto g = primitive_gcd(primitive_part(a).second, primitive_part(b).second);
  std::vector<Rational> c;
  c.reserve(g.size());
  for (auto& x : g) c.emplace_back(x);
  return QPoly(std::move(c)).monic();
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  auto [quo, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return quo;
}

QPoly pow(const QPoly& base, unsigned exponent) {
  QPoly result(1);
  QPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace qjfrac
