#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <json.hpp>

#include "qjfrac/qratfn.hpp"

namespace qjfrac {

using Real = boost::multiprecision::mpfr_float;

/// Working precision in bits. Read once from QJFRAC_PRECISION_BITS (default
/// 128, at least 64) unless set explicitly.
unsigned precision_bits();
void set_precision_bits(unsigned bits);

struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  Complex(double r) : re(r), im(0) {}                                          // NOLINT

  /// "re" or "re,im".
  static Complex parse(const std::string& text);

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

Real abs(const Complex& z);
Complex pow(const Complex& z, int n);
/// Value of an exact rational function at a complex point.
Complex eval(const QRatFn& f, const Complex& x);
std::string to_string(const Real& x, int digits = 20);
std::string to_string(const Complex& z, int digits = 20);

/// Numeric c_i and ab_i of the (q, q^2) J-fraction, from the corrected closed
/// forms.
Complex qq2_c(const Complex& q, int i);
Complex qq2_ab(const Complex& q, int i);

/// displayed: a_h, b_h exactly as written in the convergence proof, z = q.
/// sequences: a_h = -ab_h q^2, b_h = 1 - c_h q from the J-fraction itself.
enum class PringsheimForm { displayed, sequences };
std::string to_string(PringsheimForm f);

struct PringsheimRow {
  int h = 0;
  Real abs_a;
  Real abs_b;
  Real margin;  // |b_h| - |a_h| - 1
};

struct PringsheimReport {
  Complex q;
  PringsheimForm form = PringsheimForm::displayed;
  unsigned precision_bits = 0;
  std::vector<PringsheimRow> rows;
  bool all_positive() const;
};

/// Rows for 2 <= h <= h_max (both forms have a pole at h = 1).
PringsheimReport pringsheim_margins(const Complex& q, int h_max,
                                    PringsheimForm form = PringsheimForm::displayed);
nlohmann::json to_json(const PringsheimReport& r);

/// (1-t)^2/(1+t^2) - sqrt(((1-t)^4 + t^2(1+t)^2)/(1+t+t^2+t^3)); positive just
/// above 0 and negative beyond the radius.
Real threshold_function(const Real& t);
/// Bisection root of threshold_function on [lo, hi]; throws std::runtime_error
/// without a sign change.
Real threshold_radius(const Real& tolerance, const Real& lo = Real("0.01"),
                      const Real& hi = Real("0.5"));

struct ProbeRow {
  int h = 0;
  Complex value;
  Real gap;
  bool overflow = false;
};

struct ProbeReport {
  Complex q, z;
  Complex target;
  unsigned precision_bits = 0;
  std::vector<ProbeRow> rows;
};

/// (1-q) sum_n z^n/(1-q^{n+1}), summed until the terms drop below the
/// working precision.
Complex direct_sum(const Complex& q, const Complex& z);
/// Conv_h by backward evaluation of the continued fraction.
Complex convergent_value(const Complex& q, const Complex& z, int h);
/// |Conv_h - direct_sum| for 1 <= h <= h_max.
ProbeReport numeric_convergence_probe(const Complex& q, const Complex& z, int h_max);
nlohmann::json to_json(const ProbeReport& r);

}  // namespace qjfrac
