#include "qjfrac/qratfn.hpp"

#include "qjfrac/errors.hpp"

namespace qjfrac {

QRatFn::QRatFn(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void QRatFn::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

QRatFn QRatFn::monomial(const Rational& c, int k) {
  if (k >= 0) return QRatFn(QPoly::monomial(c, k));
  return QRatFn(QPoly(c), QPoly::monomial(1, -k));
}

QRatFn QRatFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return QRatFn(den_, num_);
}

Rational QRatFn::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

QRatFn QRatFn::dilate(int k) const {
  if (k < 1) throw std::invalid_argument("QRatFn::dilate: k must be >= 1");
  auto stretch = [k](const QPoly& p) {
    std::vector<Rational> v(p.is_zero() ? 0 : static_cast<size_t>(p.degree()) * k + 1);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i) * k] = p.coeff(i);
    return QPoly(std::move(v));
  };
  return QRatFn(stretch(num_), stretch(den_));
}

QRatFn& QRatFn::operator+=(const QRatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const QPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    // Both inputs reduced and coprime denominators: the sum is reduced too.
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = QPoly(1);
    return *this;
  }
  const QPoly d1 = exact_quotient(den_, g);
  const QPoly d2 = exact_quotient(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = d1 * o.den_;
  normalize();
  return *this;
}

QRatFn& QRatFn::operator-=(const QRatFn& o) { return *this += -o; }

QRatFn& QRatFn::operator*=(const QRatFn& o) {
  if (is_zero() || o.is_zero()) return *this = QRatFn();
  // Cross-cancel before multiplying so the product needs no further gcd.
  QPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  const QPoly g1 = gcd(n1, d2);
  if (!g1.is_one()) {
    n1 = exact_quotient(n1, g1);
    d2 = exact_quotient(d2, g1);
  }
  const QPoly g2 = gcd(n2, d1);
  if (!g2.is_one()) {
    n2 = exact_quotient(n2, g2);
    d1 = exact_quotient(d1, g2);
  }
  QPoly num = n1 * n2;
  QPoly den = d1 * d2;
  const Rational inv = 1 / den.leading();
  *this = QRatFn(num.scaled(inv), den.scaled(inv), Canonical{});
  return *this;
}

QRatFn& QRatFn::operator/=(const QRatFn& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this *= o.inverse();
}

QRatFn operator-(const QRatFn& a) { return QRatFn(-a.num_, a.den_, QRatFn::Canonical{}); }

QRatFn pow(const QRatFn& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  QRatFn result(1);
  QRatFn b = base;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

}  // namespace qjfrac
