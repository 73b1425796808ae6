#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qjfrac/errors.hpp"
#include "qjfrac/qratfn.hpp"

namespace qjfrac {

/// Truncated power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N).
///
/// The order N is part of the value: binary operations return a series whose
/// order is the minimum of the operand orders, so a result never claims more
/// accuracy than its inputs.
template <typename Coeff>
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : coeffs_(order, Coeff(0)) {}
  explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Polynomial (given as coefficient list) truncated to `order`.
  static Series truncate(const std::vector<Coeff>& coeffs, std::size_t order) {
    Series s(order);
    for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) s.coeffs_[i] = coeffs[i];
    return s;
  }

  static Series one(std::size_t order) {
    Series s(order);
    if (order > 0) s.coeffs_[0] = Coeff(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::size_t i) const { return coeffs_.at(i); }
  Coeff& operator[](std::size_t i) { return coeffs_.at(i); }

  Series truncated(std::size_t order) const {
    return truncate(coeffs_, std::min(order, coeffs_.size()));
  }

  /// Multiply by x^k; the order grows by k because the new low terms are
  /// known exactly.
  Series shifted(std::size_t k) const {
    std::vector<Coeff> v(k, Coeff(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(v));
  }

  Series scaled(const Coeff& c) const {
    Series r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& a) { return a.scaled(Coeff(-1)); }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) {
      if (a.coeffs_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; i + j < r.order(); ++j) {
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  /// Multiplicative inverse; throws DivisionByZero when the constant term
  /// vanishes.
  Series reciprocal() const {
    if (order() == 0) return Series();
    if (coeffs_[0] == Coeff(0)) {
      throw DivisionByZero("reciprocal of a series with zero constant term");
    }
    Series r(order());
    const Coeff inv0 = Coeff(Coeff(1) / coeffs_[0]);
    r.coeffs_[0] = inv0;
    for (std::size_t n = 1; n < order(); ++n) {
      Coeff acc(0);
      for (std::size_t k = 1; k <= n; ++k) {
        if (coeffs_[k] == Coeff(0)) continue;
        acc += coeffs_[k] * r.coeffs_[n - k];
      }
      r.coeffs_[n] = Coeff(-acc * inv0);
    }
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Coeff> coeffs_;
};

/// Series in q with rational coefficients.
using QSeries = Series<Rational>;
/// Series in z with coefficients in Q(q).
using ZSeries = Series<QRatFn>;

/// Maclaurin expansion of f to the given order; throws PoleAtZero when the
/// denominator vanishes at q = 0.
QSeries taylor(const QRatFn& f, std::size_t order);

/// Maclaurin expansion of a polynomial (exact, just truncation).
QSeries taylor(const QPoly& p, std::size_t order);

}  // namespace qjfrac
