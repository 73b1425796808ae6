#pragma once

#include "qjfrac/qpoly.hpp"

namespace qjfrac {

/// Rational function num/den in q over the rationals, kept in canonical form:
/// gcd(num, den) = 1 and den monic. Zero is 0/1. Because the form is
/// canonical, equality is structural.
class QRatFn {
 public:
  QRatFn() : den_(1) {}
  QRatFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRatFn(long c) : QRatFn(Rational(c)) {}           // NOLINT(google-explicit-constructor)
  QRatFn(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is the zero polynomial.
  QRatFn(QPoly num, QPoly den);

  static QRatFn q() { return QRatFn(QPoly::q()); }
  /// c * q^k for any integer k (negative powers allowed).
  static QRatFn monomial(const Rational& c, int k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRatFn inverse() const;
  /// Value at a rational point; throws DivisionByZero at a pole.
  Rational eval(const Rational& x) const;
  /// Substitute q -> q^k for k >= 1.
  QRatFn dilate(int k) const;

  QRatFn& operator+=(const QRatFn& o);
  QRatFn& operator-=(const QRatFn& o);
  QRatFn& operator*=(const QRatFn& o);
  QRatFn& operator/=(const QRatFn& o);

  friend QRatFn operator+(QRatFn a, const QRatFn& b) { return a += b; }
  friend QRatFn operator-(QRatFn a, const QRatFn& b) { return a -= b; }
  friend QRatFn operator*(QRatFn a, const QRatFn& b) { return a *= b; }
  friend QRatFn operator/(QRatFn a, const QRatFn& b) { return a /= b; }
  friend QRatFn operator-(const QRatFn& a);
  friend bool operator==(const QRatFn& a, const QRatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  QRatFn(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QPoly num_;
  QPoly den_;
};

QRatFn pow(const QRatFn& base, int exponent);

}  // namespace qjfrac
