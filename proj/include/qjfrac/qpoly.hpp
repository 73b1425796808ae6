#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "qjfrac/rational.hpp"

namespace qjfrac {

/// Dense univariate polynomial in q over the rationals.
///
/// Coefficients are stored by increasing power of q and never carry a
/// trailing zero, so the zero polynomial has an empty coefficient list and
/// degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);
  QPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const Rational& c, int degree);
  static QPoly q() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of q^i; zero outside the stored range.
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  QPoly monic() const;
  QPoly scaled(const Rational& c) const;
  QPoly shifted(int k) const;  // multiply by q^k, k >= 0
  QPoly derivative() const;
  Rational eval(const Rational& x) const;
  /// Order of vanishing at q = 0 (index of the lowest nonzero coefficient).
  int valuation() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DivisionByZero when
/// the divisor is the zero polynomial.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic greatest common divisor; gcd(a, 0) = monic(a) and gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Exact division when b is known to divide a; throws std::logic_error if a
/// nonzero remainder appears.
QPoly exact_quotient(const QPoly& a, const QPoly& b);

QPoly pow(const QPoly& base, unsigned exponent);

/// Multiply a polynomial by the least common multiple of its coefficient
/// denominators and divide by the gcd of the resulting numerators: the
/// primitive integer associate with positive leading coefficient.
/// Returns the scalar s with a = s * primitive.
std::pair<Rational, std::vector<Integer>> primitive_part(const QPoly& a);

}  // namespace qjfrac
