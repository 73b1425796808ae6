#include "qjfrac/convergence.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qjfrac {

namespace {

unsigned& bits_ref() {
  static unsigned bits = [] {
    unsigned b = 128;
    if (const char* env = std::getenv("QJFRAC_PRECISION_BITS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 64 && v <= 100000) b = static_cast<unsigned>(v);
    }
    return b;
  }();
  return bits;
}

// Precision is thread local in boost's mpfr backend; every entry point calls this.
void apply_precision() {
  const unsigned digits = static_cast<unsigned>(std::ceil(bits_ref() * 0.30103)) + 1;
  if (Real::default_precision() != digits) Real::default_precision(digits);
}

// Raises the working precision for one computation and restores it after.
class ScopedBits {
 public:
  explicit ScopedBits(unsigned bits) : saved_(bits_ref()) {
    bits_ref() = std::max(saved_, bits);
    apply_precision();
  }
  ~ScopedBits() {
    bits_ref() = saved_;
    apply_precision();
  }
  ScopedBits(const ScopedBits&) = delete;
  ScopedBits& operator=(const ScopedBits&) = delete;

 private:
  unsigned saved_;
};

}  // namespace

unsigned precision_bits() { return bits_ref(); }

void set_precision_bits(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  bits_ref() = bits;
  apply_precision();
}

Complex Complex::parse(const std::string& text) {
  apply_precision();
  try {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {Real(text), Real(0)};
    return {Real(text.substr(0, comma)), Real(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("not a complex number: " + text);
  }
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.re * b.re + b.im * b.im;
  if (d == 0) throw std::domain_error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex pow(const Complex& z, int n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex r(1), b = z;
  for (; n; n >>= 1) {
    if (n & 1) r = r * b;
    b = b * b;
  }
  return r;
}

namespace {

Complex eval_poly(const QPoly& p, const Complex& x) {
  Complex acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + Complex(Real(it->get_num().get_str()) / Real(it->get_den().get_str()));
  }
  return acc;
}

}  // namespace

Complex eval(const QRatFn& f, const Complex& x) {
  apply_precision();
  return eval_poly(f.num(), x) / eval_poly(f.den(), x);
}

std::string to_string(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Complex& z, int digits) {
  if (z.im == 0) return to_string(z.re, digits);
  return to_string(z.re, digits) + "," + to_string(z.im, digits);
}

// Same closed forms as pochhammer_spec with a = q, b = q^2.
Complex qq2_c(const Complex& q, int i) {
  apply_precision();
  const Complex one(1), a = q, b = q * q;
  if (i == 1) return (a - one) / (b - one);
  const Complex num = q + a * b * pow(q, 2 * i - 3) + a * (one - pow(q, i - 1) - pow(q, i)) +
                      b * pow(q, i - 2) * (pow(q, i) - one - q);
  return pow(q, i - 2) * num / ((one - b * pow(q, 2 * i - 4)) * (one - b * pow(q, 2 * i - 2)));
}

Complex qq2_ab(const Complex& q, int i) {
  apply_precision();
  const Complex one(1), a = q, b = q * q;
  const Complex num = pow(q, 2 * i - 4) * (one - b * pow(q, i - 3)) * (one - a * pow(q, i - 2)) *
                      (a - b * pow(q, i - 2)) * (one - pow(q, i - 1));
  const Complex m = one - b * pow(q, 2 * i - 4);
  return num / ((one - b * pow(q, 2 * i - 5)) * m * m * (one - b * pow(q, 2 * i - 3)));
}

std::string to_string(PringsheimForm f) {
  return f == PringsheimForm::displayed ? "displayed" : "sequences";
}

bool PringsheimReport::all_positive() const {
  for (const auto& r : rows) {
    if (!(r.margin > 0)) return false;
  }
  return !rows.empty();
}

PringsheimReport pringsheim_margins(const Complex& q, int h_max, PringsheimForm form) {
  apply_precision();
  if (!(abs(q) < 1) || abs(q) == 0) throw std::invalid_argument("need 0 < |q| < 1");
  // |a_h| is of size |q|^{2h} and the margin of size |q|^h; both must stay
  // visible next to 1.
  const double log2q = -std::log2(abs(q).convert_to<double>());
  const double need = 2.0 * h_max * log2q + 64;
  ScopedBits scope(static_cast<unsigned>(std::min(need, 200000.0)));
  PringsheimReport rep;
  rep.q = q;
  rep.form = form;
  rep.precision_bits = precision_bits();
  const Complex one(1), z = q;
  for (int i = 2; i <= h_max; ++i) {
    Complex a, b;
    if (form == PringsheimForm::displayed) {
      const Complex t = one - pow(q, i - 1);
      a = z * z * pow(q, 2 * i - 3) * t * t * t * t /
          ((one - pow(q, 2 * i - 3)) * (one - pow(q, 2 * i - 2)) * (one - pow(q, 2 * i - 2)) *
           (one - pow(q, 2 * i - 1)));
      const Complex inner = Complex(2) * q + pow(q, 2 * i) - pow(q, i) - pow(q, i + 1) - q * q -
                            pow(q, 3) + pow(q, i + 2);
      b = (one - z * pow(q, i - 2) * inner) /
          ((one - pow(q, 2 * i - 2)) * (one - pow(q, 2 * i)));
    } else {
      a = -(qq2_ab(q, i) * z * z);
      b = one - qq2_c(q, i) * z;
    }
    PringsheimRow r;
    r.h = i;
    r.abs_a = abs(a);
    r.abs_b = abs(b);
    r.margin = r.abs_b - r.abs_a - 1;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

nlohmann::json to_json(const PringsheimReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& x : r.rows) {
    rows.push_back({{"h", x.h},
                    {"abs_a", to_string(x.abs_a)},
                    {"abs_b", to_string(x.abs_b)},
                    {"margin", to_string(x.margin)}});
  }
  return {{"q", to_string(r.q)},
          {"form", to_string(r.form)},
          {"z", "q"},
          {"precision_bits", r.precision_bits},
          {"all_positive", r.all_positive()},
          {"rows", rows}};
}

Real threshold_function(const Real& t) {
  apply_precision();
  const Real u = 1 - t;
  const Real lhs = u * u / (1 + t * t);
  const Real rhs = sqrt((u * u * u * u + t * t * (1 + t) * (1 + t)) / (1 + t + t * t + t * t * t));
  return lhs - rhs;
}

Real threshold_radius(const Real& tolerance, const Real& lo_in, const Real& hi_in) {
  apply_precision();
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  Real lo = lo_in, hi = hi_in;
  Real flo = threshold_function(lo);
  if (flo * threshold_function(hi) >= 0) {
    throw std::runtime_error("threshold function has no sign change on the bracket");
  }
  while (hi - lo > tolerance) {
    const Real mid = (lo + hi) / 2;
    const Real fm = threshold_function(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

Complex direct_sum(const Complex& q, const Complex& z) {
  apply_precision();
  if (!(abs(q) < 1) || !(abs(z) < 1)) throw std::invalid_argument("need |q| < 1 and |z| < 1");
  const Complex one(1);
  const Real eps = pow(Real(2), -static_cast<int>(precision_bits()) - 4);
  Complex sum(0), zn(1), qn = q;
  for (long n = 0; n < 1000000; ++n) {
    const Complex term = zn / (one - qn);
    sum = sum + term;
    if (abs(zn) < eps) break;
    zn = zn * z;
    qn = qn * q;
  }
  return (one - q) * sum;
}

Complex convergent_value(const Complex& q, const Complex& z, int h) {
  apply_precision();
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  const Complex one(1);
  Complex tail = one - qq2_c(q, h) * z;
  for (int i = h - 1; i >= 1; --i) tail = one - qq2_c(q, i) * z - qq2_ab(q, i + 1) * z * z / tail;
  return one / tail;
}

ProbeReport numeric_convergence_probe(const Complex& q, const Complex& z, int h_max) {
  apply_precision();
  ProbeReport rep;
  rep.q = q;
  rep.z = z;
  rep.precision_bits = precision_bits();
  rep.target = direct_sum(q, z);
  for (int h = 1; h <= h_max; ++h) {
    ProbeRow r;
    r.h = h;
    try {
      r.value = convergent_value(q, z, h);
      r.gap = abs(r.value - rep.target);
      r.overflow = !boost::multiprecision::isfinite(r.gap);
    } catch (const std::domain_error&) {
      r.overflow = true;
    }
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

nlohmann::json to_json(const ProbeReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& x : r.rows) {
    nlohmann::json j{{"h", x.h}, {"overflow", x.overflow}};
    j["value"] = x.overflow ? nlohmann::json(nullptr) : nlohmann::json(to_string(x.value));
    j["gap"] = x.overflow ? nlohmann::json(nullptr) : nlohmann::json(to_string(x.gap));
    rows.push_back(std::move(j));
  }
  return {{"q", to_string(r.q)},
          {"z", to_string(r.z)},
          {"target", to_string(r.target)},
          {"precision_bits", r.precision_bits},
          {"rows", rows}};
}

}  // namespace qjfrac
