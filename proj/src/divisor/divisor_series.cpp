#include "qjfrac/divisor.hpp"

#include <stdexcept>

#include "qjfrac/serialize.hpp"

namespace qjfrac {

Stirling2Table::Stirling2Table(int n_max) {
  if (n_max < 0) throw std::invalid_argument("Stirling2Table: negative size");
  rows_.push_back({Integer(1)});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Integer> row(n + 1, Integer(0));
    const auto& prev = rows_.back();
    for (int k = 1; k <= n; ++k) {
      Integer v = k < n ? Integer(k * prev[k]) : Integer(0);
      row[k] = v + prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

Integer Stirling2Table::operator()(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows_.at(n)[k];
}

PowerFraction PowerFraction::derivative() const {
  PowerFraction d;
  d.base = base;
  d.power = power + 1;
  d.num = num.derivative() * base - num.scaled(QRatFn(power)) * base.derivative();
  return d;
}

QRatFn PowerFraction::eval(const QRatFn& z) const {
  return num.eval(z) / pow(base.eval(z), power);
}

PowerFraction power_weight_transform(const PowerFraction& f, int m) {
  if (m < 0) throw std::invalid_argument("power_weight_transform: negative exponent");
  if (m == 0) return f;
  Stirling2Table s2(m);
  PowerFraction out;
  out.base = f.base;
  out.power = f.power + m;
  PowerFraction d = f;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) d = d.derivative();
    if (s2(m, j) == 0) continue;
    ZPoly term = d.num.shifted(j).scaled(QRatFn(Rational(s2(m, j))));
    out.num = out.num + term * pow(f.base, static_cast<unsigned>(m - j));
  }
  return out;
}

ZFraction quotient_derivative(const ZPoly& num, const ZPoly& den) {
  return {num.derivative() * den - num * den.derivative(), den * den};
}

Window window_of(int n, int h) {
  if (n < h) return Window::certified;
  if (n < 2 * h) return Window::empirical;
  return Window::unverified;
}

std::string to_string(Window w) {
  switch (w) {
    case Window::certified: return "certified";
    case Window::empirical: return "empirical";
    case Window::unverified: return "unverified";
  }
  return "unverified";
}

namespace {

const JFractionSpec& qq2() {
  static const JFractionSpec spec = named_preset("qq2")->memoized();
  return spec;
}

QRatFn one_minus_q() { return QRatFn(QPoly{1, -1}); }

void check_request(const DivisorRequest& req) {
  if (req.alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  if (req.h < 1) throw std::invalid_argument("h must be >= 1");
  if (req.modulus && *req.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
}

// Multiply both by the lcm of all coefficient denominators so that the
// derivatives below only see polynomial coefficients.
std::pair<ZPoly, ZPoly> clear_denominators(const ZPoly& P, const ZPoly& Q) {
  QPoly l(1);
  for (const ZPoly* p : {&P, &Q}) {
    for (const auto& c : p->coeffs()) l = exact_quotient(l * c.den(), gcd(l, c.den()));
  }
  const QRatFn L(l);
  return {P.scaled(L), Q.scaled(L)};
}

}  // namespace

QRatFn rational_approximant(int alpha, int h) {
  check_request({alpha, h, 1, std::nullopt});
  const ConvergentPair pair = convergents(qq2(), h);
  const auto [P, Q] = clear_denominators(pair.P, pair.Q);
  PowerFraction f{P.shifted(1), Q, 1};
  return power_weight_transform(f, alpha).eval(QRatFn::q()) / one_minus_q();
}

QSeries sigma_gf(const DivisorRequest& req) {
  check_request(req);
  return taylor(rational_approximant(req.alpha, req.h), req.order);
}

QSeries divisor_gf(const DivisorRequest& req) {
  DivisorRequest r = req;
  r.alpha = 0;
  return sigma_gf(r);
}

QSeries partial_sums(const DivisorRequest& req) {
  check_request(req);
  return taylor(rational_approximant(req.alpha, req.h) / one_minus_q(), req.order);
}

std::optional<long> reduce_mod(const Rational& r, long p) {
  const Integer P(p);
  Integer inv;
  const Integer den = r.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()) == 0) return std::nullopt;
  Integer v = (r.get_num() * inv) % P;
  if (v < 0) v += P;
  return v.get_si();
}

std::vector<TableRow> divisor_table(const DivisorRequest& req, bool cumulative) {
  const QSeries s = cumulative ? partial_sums(req) : sigma_gf(req);
  std::vector<TableRow> rows;
  for (std::size_t n = 1; n < s.order(); ++n) {
    TableRow r;
    r.n = static_cast<int>(n);
    r.value = s[n];
    r.window = window_of(r.n, req.h);
    if (req.modulus) {
      r.residue = reduce_mod(r.value, *req.modulus);
      r.non_integral = !r.residue.has_value();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<TableRow> congruence_table(const DivisorRequest& req) {
  if (!req.modulus) throw std::invalid_argument("congruence_table needs a modulus");
  DivisorRequest r = req;
  r.order = std::min<std::size_t>(req.order, static_cast<std::size_t>(2 * req.h));
  return divisor_table(r);
}

nlohmann::json to_json(const TableRow& row) {
  nlohmann::json j{{"n", row.n}, {"value", to_string(row.value)},
                   {"certified", row.window == Window::certified},
                   {"window", to_string(row.window)}};
  j["residue"] = row.residue ? nlohmann::json(*row.residue) : nlohmann::json(nullptr);
  j["non_integral"] = row.non_integral;
  return j;
}

namespace {

QRatFn series_coeff(const ZSeries& s, int i) {
  return i < 0 || i >= static_cast<int>(s.order()) ? QRatFn(0) : s[i];
}

// Expansion of S_{h,m,s} in z, indexed [m][s].
std::vector<std::vector<ZSeries>> nested_table(const JFractionSpec& spec, int h,
                                               std::size_t order) {
  std::vector<std::vector<ZSeries>> t(h / 2 + 1);
  for (int m = 1; m <= h / 2; ++m) {
    for (int s = 0; s <= m * (h + 1); ++s) {
      t[m].push_back(nested_sum(spec, {h, m, s, NestedVariant::denominator}).to_series(order));
    }
  }
  return t;
}

QRatFn nested_coeff(const std::vector<std::vector<ZSeries>>& t, int m, int s, int i) {
  if (m < 1 || m >= static_cast<int>(t.size())) return 0;
  if (s < 0 || s >= static_cast<int>(t[m].size())) return 0;
  return series_coeff(t[m][s], i);
}

// [z^n] Q_h from the coefficient lemma: E(h, n) + sum (-1)^m E(h, n-k) [z^{k-2m}] S.
ZPoly denominator_via_lemma(const JFractionSpec& spec, const StirlingQTriangle& e, int h) {
  const auto t = nested_table(spec, h, static_cast<std::size_t>(h) + 1);
  std::vector<QRatFn> coeffs;
  for (int n = 0; n <= h; ++n) {
    QRatFn v = e.entry(h, n);
    for (int m = 1; m <= h / 2; ++m) {
      for (int s = 0; s < static_cast<int>(t[m].size()); ++s) {
        for (int k = 0; k <= n; ++k) {
          const QRatFn x = e.entry(h, n - k) * nested_coeff(t, m, s, k - 2 * m);
          if (m % 2) v -= x;
          else v += x;
        }
      }
    }
    coeffs.push_back(v);
  }
  return ZPoly(std::move(coeffs));
}

QRatFn sign(int k) { return k % 2 ? QRatFn(-1) : QRatFn(1); }

}  // namespace

ZPoly tilde_D0j_literal(const JFractionSpec& spec, int j) {
  if (j < 1) throw std::invalid_argument("tilde_D0j: j must be >= 1");
  const StirlingQTriangle e(spec.c, j + 1);
  auto E = [&](int h, int k) { return e.entry(h, k); };
  const std::size_t order = static_cast<std::size_t>(2 * j) + 2;
  const auto Sj = nested_table(spec, j, order);
  const auto Sj1 = nested_table(spec, j + 1, order);

  std::vector<QRatFn> out(2 * j + 2);
  for (int n = 0; n <= 2 * j; ++n) out[n] += E(j + 1, n) * E(j, 2 * j - n);
  for (int n = 0; n <= 2 * j + 1; ++n) {
    QRatFn v;
    for (int m1 = 1; m1 <= j / 2; ++m1) {
      for (int m2 = 1; m2 <= (j + 1) / 2; ++m2) {
        for (int s1 = 1; s1 <= m1 * j; ++s1) {
          for (int s2 = 1; s2 <= m2 * (j + 1); ++s2) {
            for (int k1 = 1; k1 <= s1; ++k1) {
              const QRatFn a = nested_coeff(Sj, m1, s1, k1 - 2 * m1);
              if (a.is_zero()) continue;
              for (int k2 = 1; k2 <= s2; ++k2) {
                const QRatFn b = nested_coeff(Sj1, m2, s2, k2 - 2 * m2);
                if (b.is_zero()) continue;
                v += sign(m1 + m2) * E(j + 1, n - k2) * E(j, 2 * j + 1 - n - k1) * a * b;
              }
            }
          }
        }
      }
    }
    for (int m = 1; m <= (j + 1) / 2; ++m) {
      for (int s = 0; s <= m * (j + 1); ++s) {
        for (int k = 0; k <= s; ++k) {
          v += sign(m) * E(j + 1, n - k) * E(j, 2 * j + 1 - n) * nested_coeff(Sj1, m, s, k - 2 * m);
        }
      }
    }
    for (int m = 1; m <= j / 2; ++m) {
      for (int s = 0; s <= m * j; ++s) {
        for (int k = 0; k <= s; ++k) {
          v += sign(m) * E(j, n - k) * E(j + 1, 2 * j + 1 - n) * nested_coeff(Sj, m, s, k - 2 * m);
        }
      }
    }
    out[n] += v;
  }
  return ZPoly(std::move(out));
}

TildeDReport tilde_D0j(const JFractionSpec& spec, int j) {
  TildeDReport r;
  r.j = j;
  r.literal = tilde_D0j_literal(spec, j);
  const StirlingQTriangle e(spec.c, j + 1);
  r.via_lemma = denominator_via_lemma(spec, e, j) * denominator_via_lemma(spec, e, j + 1);
  r.recurrence_product = convergents(spec, j).Q * convergents(spec, j + 1).Q;
  r.literal_matches = r.literal == r.recurrence_product;
  r.lemma_matches = r.via_lemma == r.recurrence_product;
  if (!r.literal.is_zero() && r.literal.degree() == r.recurrence_product.degree()) {
    const int d = r.literal.degree();
    const QRatFn ratio = r.literal.coeff(d) / r.recurrence_product.coeff(d);
    if (r.literal == r.recurrence_product.scaled(ratio)) r.literal_ratio = ratio;
  }
  return r;
}

nlohmann::json to_json(const TildeDReport& r) {
  nlohmann::json j{{"j", r.j},
                   {"literal", to_string(r.literal)},
                   {"via_lemma", to_string(r.via_lemma)},
                   {"recurrence_product", to_string(r.recurrence_product)},
                   {"literal_matches", r.literal_matches},
                   {"lemma_matches", r.lemma_matches}};
  j["literal_ratio"] = r.literal_ratio ? nlohmann::json(to_string(*r.literal_ratio))
                                       : nlohmann::json(nullptr);
  return j;
}

ZFraction scaled_derivative_of_power_quotient(int N, const ZPoly& G, int k) {
  const ZPoly zN = ZPoly::monomial(QRatFn(1), N);
  const ZPoly G1 = G.derivative();
  switch (k) {
    case 0: return {zN, G};
    case 1:
      // N z^N/G - z^{N+1} G'/G^2
      return {zN.scaled(QRatFn(N)) * G - zN.shifted(1) * G1, G * G};
    case 2: {
      // N(N-1) z^N/G - 2N z^{N+1} G'/G^2 - z^{N+2}(G G'' - 2 G'^2)/G^3
      const ZPoly G2 = G1.derivative();
      ZPoly num = zN.scaled(QRatFn(N * (N - 1))) * G * G -
                  zN.shifted(1).scaled(QRatFn(2 * N)) * G1 * G -
                  zN.shifted(2) * (G * G2 - (G1 * G1).scaled(QRatFn(2)));
      return {num, G * G * G};
    }
    default: throw std::invalid_argument("scaled_derivative_of_power_quotient: k must be 0, 1 or 2");
  }
}

namespace {

QRatFn eval_fraction(const ZFraction& f, const QRatFn& z) { return f.num.eval(z) / f.den.eval(z); }

QRatFn q_pochhammer_at(const QRatFn& x, const QRatFn& base, int n) {
  QRatFn p(1);
  QRatFn b(1);
  for (int i = 0; i < n; ++i) {
    p *= QRatFn(1) - x * b;
    b *= base;
  }
  return p;
}

// Displayed weight q q^{j^2} (q;q)_j^4 / ((q;q^2)_j^2 (q^2;q^2)_j^2).
QRatFn displayed_weight(int j) {
  const QRatFn q = QRatFn::q();
  const QRatFn q2 = q * q;
  return q * pow(q, j * j) * pow(q_pochhammer_at(q, q, j), 4) /
         (pow(q_pochhammer_at(q, q2, j), 2) * pow(q_pochhammer_at(q2, q2, j), 2));
}

// Displayed bracket for alpha = 1, 2 with G and its z-derivatives at z = q.
QRatFn displayed_bracket(int alpha, int j, const ZPoly& G) {
  const QRatFn q = QRatFn::q();
  const QRatFn g = G.eval(q);
  const QRatFn g1 = G.derivative().eval(q);
  const QRatFn g2 = G.derivative().derivative().eval(q);
  const QRatFn q2j = pow(q, 2 * j);
  if (alpha == 1) return QRatFn(2 * j) * q2j / g - q2j * q * g1 / (g * g);
  return QRatFn(4 * j * j) * q2j / g - QRatFn(4 * j + 1) * q2j * q * g1 / (g * g) -
         q2j * q * (g * g2 - QRatFn(2) * g1 * g1) / (g * g * g);
}

}  // namespace

SpecialCaseReport sigma_special_case_check(int alpha, int h) {
  if (alpha != 1 && alpha != 2) throw std::invalid_argument("special cases are alpha = 1, 2");
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  const JFractionSpec& spec = qq2();
  const QRatFn q = QRatFn::q();
  const auto seq = convergent_sequence(spec, h);
  const std::size_t order = static_cast<std::size_t>(h);

  QRatFn normalized;
  for (int j = 0; j < h; ++j) {
    // G = L Q_j Q_{j+1} with polynomial coefficients, weight lambda_{j+1} L.
    const auto [G, LG] = clear_denominators(seq[j].Q * seq[j + 1].Q, ZPoly(1));
    const int N = 2 * j + 1;
    ZFraction t = scaled_derivative_of_power_quotient(N, G, 1);
    if (alpha == 2) t = t + scaled_derivative_of_power_quotient(N, G, 2);
    normalized += lambda(spec, j + 1) * LG.coeff(0) * eval_fraction(t, q);
  }
  normalized /= one_minus_q();

  QRatFn literal = alpha == 1 ? q * q * QRatFn(QPoly{1, 1}) / one_minus_q()
                              : q * q * QRatFn(QPoly{1, 1}) * QRatFn(QPoly{1, 2}) / one_minus_q();
  for (int j = 1; j < h; ++j) {
    const ZPoly G = seq[j].Q * seq[j + 1].Q;
    literal += displayed_weight(j) * displayed_bracket(alpha, j, G);
  }

  SpecialCaseReport r;
  r.alpha = alpha;
  r.h = h;
  const QSeries target = taylor(rational_approximant(alpha, h), order);
  r.residual_normalized = target - taylor(normalized, order);
  r.residual_literal = target - taylor(literal, order);
  r.normalized_zero = r.residual_normalized == QSeries(order);
  r.literal_zero = r.residual_literal == QSeries(order);
  return r;
}

nlohmann::json to_json(const SpecialCaseReport& r) {
  auto series = [](const QSeries& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : s.coeffs()) a.push_back(to_string(c));
    return a;
  };
  return {{"alpha", r.alpha},
          {"h", r.h},
          {"residual_normalized", series(r.residual_normalized)},
          {"residual_literal", series(r.residual_literal)},
          {"normalized_zero", r.normalized_zero},
          {"literal_zero", r.literal_zero}};
}

}  // namespace qjfrac
