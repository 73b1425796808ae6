#include "qjfrac/zpoly.hpp"

#include <stdexcept>

namespace qjfrac {

ZPoly::ZPoly(std::vector<QRatFn> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(const QRatFn& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

ZPoly ZPoly::monomial(const QRatFn& c, int degree) {
  if (degree < 0) throw std::invalid_argument("ZPoly::monomial: negative degree");
  if (c.is_zero()) return {};
  std::vector<QRatFn> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::one_minus(const QRatFn& c) { return ZPoly(std::vector<QRatFn>{QRatFn(1), -c}); }

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QRatFn ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<size_t>(i)];
}

ZPoly ZPoly::scaled(const QRatFn& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  std::vector<QRatFn> v;
  v.reserve(coeffs_.size());
  for (const auto& x : coeffs_) v.push_back(x * c);
  return ZPoly(std::move(v));
}

ZPoly ZPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("ZPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<QRatFn> v(static_cast<size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return ZPoly(std::move(v));
}

ZPoly ZPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<QRatFn> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * QRatFn(static_cast<long>(i));
  return ZPoly(std::move(v));
}

QRatFn ZPoly::eval(const QRatFn& value) const {
  QRatFn acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QRatFn> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ZPoly(std::move(r));
}

ZPoly pow(const ZPoly& base, unsigned exponent) {
  ZPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

ZFraction operator+(const ZFraction& a, const ZFraction& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

ZFraction operator-(const ZFraction& a, const ZFraction& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

ZFraction operator*(const ZFraction& a, const ZFraction& b) {
  return {a.num * b.num, a.den * b.den};
}

ZSeries ZFraction::to_series(std::size_t order) const {
  return num.to_series(order) * den.to_series(order).reciprocal();
}

}  // namespace qjfrac
