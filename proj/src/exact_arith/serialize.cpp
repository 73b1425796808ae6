#include <map>
#include <numeric>
#include <sstream>

#include "qjfrac/errors.hpp"
#include "qjfrac/serialize.hpp"

namespace qjfrac {

namespace {

std::string monomial_string(int k) {
  if (k == 0) return "";
  if (k == 1) return "q";
  return "q^" + std::to_string(k);
}

// Polynomial with terms in increasing degree, using `var` as indeterminate.
std::string poly_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    const std::string mono = monomial_string(i);
    if (mono.empty()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << '*';
      out << mono;
    }
  }
  return out.str();
}

bool is_single_term(const QPoly& p) {
  int terms = 0;
  for (const auto& c : p.coeffs()) terms += (c != 0);
  return terms <= 1;
}

QPoly cyclotomic(int n) {
  static std::map<int, QPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  QPoly p = QPoly::monomial(1, n) - QPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_quotient(p, cyclotomic(d));
  }
  cache.emplace(n, p);
  return p;
}

int totient(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

struct Factored {
  Rational scalar = 1;
  int q_power = 0;
  std::vector<std::pair<QPoly, int>> factors;  // each with nonzero constant term
};

// Normalizes a factor to constant term > 0 (display convention "1 - q"),
// returning the sign that was absorbed.
int orient(QPoly& f) {
  if (f.coeff(0) < 0) {
    f = -f;
    return -1;
  }
  return 1;
}

bool divides(const QPoly& a, const QPoly& b, QPoly& quotient) {
  auto [quo, rem] = divmod(a, b);
  if (!rem.is_zero()) return false;
  quotient = std::move(quo);
  return true;
}

Factored factor_for_display(const QPoly& p) {
  Factored out;
  auto [scalar, prim] = primitive_part(p);
  out.scalar = scalar;
  std::vector<Rational> v(prim.begin(), prim.end());
  QPoly rest{std::move(v)};
  out.q_power = rest.valuation();
  if (out.q_power > 0) {
    rest = QPoly(std::vector<Rational>(rest.coeffs().begin() + out.q_power, rest.coeffs().end()));
  }
  int sign = 1;
  auto pull = [&](QPoly f) {
    int mult = 0;
    QPoly quo;
    while (rest.degree() >= f.degree() && divides(rest, f, quo)) {
      rest = quo;
      ++mult;
    }
    if (mult > 0) {
      const int s = orient(f);
      if (s < 0 && mult % 2 == 1) sign = -sign;
      out.factors.emplace_back(std::move(f), mult);
    }
  };
  for (int n = 1; rest.degree() > 0 && n <= 4 * rest.degree() + 8; ++n) {
    if (totient(n) <= rest.degree()) pull(cyclotomic(n));
  }
  for (long b = 1; b <= 12 && rest.degree() > 0; ++b) {
    for (long a = -12; a <= 12 && rest.degree() > 0; ++a) {
      if (a == 0 || std::gcd(a, b) != 1) continue;
      if ((a == 1 || a == -1) && b == 1) continue;  // cyclotomic, already pulled
      pull(QPoly{a, b});
    }
  }
  if (rest.degree() > 0) {
    const int s = orient(rest);
    sign *= s;
    out.factors.emplace_back(rest, 1);
  } else {
    out.scalar *= rest.coeff(0);
  }
  out.scalar *= sign;
  return out;
}

// Product of factors without scalar, e.g. "q*(1 - q)^2*(1 + q)".
std::string factors_string(const Factored& f, bool& empty) {
  std::vector<std::string> parts;
  if (f.q_power > 0) parts.push_back(monomial_string(f.q_power));
  for (const auto& [poly, mult] : f.factors) {
    std::string s = "(" + poly_string(poly) + ")";
    if (mult > 1) s += "^" + std::to_string(mult);
    parts.push_back(s);
  }
  empty = parts.empty();
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '*';
    out += parts[i];
  }
  return out;
}

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return nlohmann::json(z.get_si());
  return nlohmann::json(z.get_str());
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string in JSON");
    return z;
  }
  throw ParseError("expected integer or decimal string in JSON");
}

}  // namespace

std::string to_string(const QPoly& p) { return poly_string(p); }

std::string to_string(const QRatFn& f) {
  if (f.den().is_one()) return poly_string(f.num());
  return "(" + poly_string(f.num()) + ")/(" + poly_string(f.den()) + ")";
}

std::string to_factored_string(const QRatFn& f) {
  if (f.is_zero()) return "0";
  Factored n = factor_for_display(f.num());
  Factored d = factor_for_display(f.den());
  Rational scalar = n.scalar / d.scalar;
  bool n_empty = false;
  bool d_empty = false;
  std::string nf = factors_string(n, n_empty);
  std::string df = factors_string(d, d_empty);
  const Integer sn = scalar.get_num();
  const Integer sd = scalar.get_den();
  std::string num;
  if (n_empty) {
    num = sn.get_str();
  } else if (sn == 1) {
    num = nf;
  } else if (sn == -1) {
    num = "-" + nf;
  } else {
    num = sn.get_str() + "*" + nf;
  }
  std::string den;
  if (d_empty) {
    den = sd == 1 ? "" : sd.get_str();
  } else {
    den = sd == 1 ? df : sd.get_str() + "*" + df;
  }
  if (den.empty()) return num;
  const bool num_simple = n_empty || (n.factors.empty() && sn == 1);
  const bool den_simple = (d.factors.size() + (d.q_power > 0 ? 1 : 0) <= 1 && sd == 1) || d_empty;
  const std::string lhs = num_simple ? num : "(" + num + ")";
  std::string rhs = den;
  if (!den_simple) rhs = "(" + den + ")";
  return lhs + "/" + rhs;
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const QRatFn c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool wrap = !c.den().is_one() || !is_single_term(c.num());
    std::string cs = to_string(c);
    if (wrap && c.den().is_one()) cs = "(" + cs + ")";
    if (i == 0) {
      out << cs;
    } else {
      if (!c.is_one()) out << cs << '*';
      out << (i == 1 ? std::string("z") : "z^" + std::to_string(i));
    }
  }
  return out.str();
}

nlohmann::json to_json(const Rational& r) {
  return nlohmann::json::array({integer_json(r.get_num()), integer_json(r.get_den())});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("rational must be a [num, den] pair");
  Integer d = integer_from_json(j[1]);
  if (d == 0) throw DivisionByZero("zero denominator in JSON rational");
  return make_rational(integer_from_json(j[0]), d);
}

nlohmann::json to_json(const QPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient pairs");
  std::vector<Rational> v;
  v.reserve(j.size());
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return QPoly(std::move(v));
}

nlohmann::json to_json(const QRatFn& f) {
  return nlohmann::json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

QRatFn qratfn_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_qratfn(j.get<std::string>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational function JSON needs \"num\" and \"den\"");
  }
  return QRatFn(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

}  // namespace qjfrac
