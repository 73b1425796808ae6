#pragma once

#include <vector>

#include "qjfrac/qratfn.hpp"
#include "qjfrac/series.hpp"

namespace qjfrac {

/// Polynomial in z with coefficients in Q(q). No trailing zero coefficient.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<QRatFn> coeffs);
  ZPoly(const QRatFn& c);  // NOLINT(google-explicit-constructor)
  ZPoly(long c) : ZPoly(QRatFn(c)) {}  // NOLINT(google-explicit-constructor)

  static ZPoly monomial(const QRatFn& c, int degree);
  static ZPoly z() { return monomial(QRatFn(1), 1); }
  /// 1 - c z
  static ZPoly one_minus(const QRatFn& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  QRatFn coeff(int i) const;
  const std::vector<QRatFn>& coeffs() const { return coeffs_; }

  ZPoly scaled(const QRatFn& c) const;
  ZPoly shifted(int k) const;  // multiply by z^k
  ZPoly derivative() const;    // d/dz
  /// Substitute z := value (Horner).
  QRatFn eval(const QRatFn& value) const;
  /// Apply f coefficientwise (used for index-shifting substitutions).
  template <typename F>
  ZPoly map(F&& f) const {
    std::vector<QRatFn> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return ZPoly(std::move(v));
  }
  ZSeries to_series(std::size_t order) const { return ZSeries::truncate(coeffs_, order); }

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a) { return a.scaled(QRatFn(-1)); }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<QRatFn> coeffs_;
};

ZPoly pow(const ZPoly& base, unsigned exponent);

/// Unreduced quotient num/den of polynomials in z over Q(q). Arithmetic is by
/// cross multiplication without any gcd in z; identity checks compare
/// num1*den2 against num2*den1.
struct ZFraction {
  ZPoly num;
  ZPoly den{1};

  friend ZFraction operator+(const ZFraction& a, const ZFraction& b);
  friend ZFraction operator-(const ZFraction& a, const ZFraction& b);
  friend ZFraction operator*(const ZFraction& a, const ZFraction& b);
  /// Power series expansion in z; requires den(0) != 0.
  ZSeries to_series(std::size_t order) const;
  bool is_zero() const { return num.is_zero(); }
  bool equals(const ZFraction& o) const { return num * o.den == o.num * den; }
};

}  // namespace qjfrac
