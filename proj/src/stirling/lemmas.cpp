#include <sstream>

#include "qjfrac/serialize.hpp"
#include "qjfrac/stirling.hpp"

namespace qjfrac {

namespace {

CheckRow row(std::string lemma, int h, std::optional<int> n, const QRatFn& residual,
             bool asserted = true) {
  CheckRow r;
  r.lemma = std::move(lemma);
  r.h = h;
  r.n = n;
  r.ok = residual.is_zero();
  r.residual = to_string(residual);
  r.asserted = asserted;
  return r;
}

CheckRow row(std::string lemma, int h, const ZPoly& residual, bool asserted = true) {
  CheckRow r;
  r.lemma = std::move(lemma);
  r.h = h;
  r.ok = residual.is_zero();
  r.residual = to_string(residual);
  r.asserted = asserted;
  return r;
}

// Residual of a ZFraction identity, shown as its first z-coefficients.
CheckRow row(std::string lemma, int h, std::optional<int> n, const ZFraction& residual,
             bool asserted) {
  constexpr std::size_t shown = 2;
  CheckRow r;
  r.lemma = std::move(lemma);
  r.h = h;
  r.n = n;
  r.ok = residual.is_zero();
  r.asserted = asserted;
  if (r.ok) {
    r.residual = "0";
  } else {
    ZSeries s = residual.to_series(shown);
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < shown; ++i) out << (i ? ", " : "") << to_string(s[i]);
    out << "] + O(z^" << shown << ")";
    r.residual = out.str();
  }
  return r;
}

QRatFn series_coeff(const ZSeries& s, int i) {
  return i < 0 || i >= static_cast<int>(s.order()) ? QRatFn(0) : s[i];
}

// Checks  target * D == prefactor * (D + sum_m (-1)^m z^{2m} num_{m,s})  where
// every nested sum shares the denominator D, and the coefficient form
//   [z^n] target = E(n) + sum_{m,s,k} (-1)^m E(n-k) [z^{k-2m}] S_{m,s}.
struct Expansion {
  const char* lemma_i;
  const char* lemma_ii;
  ZPoly target;
  ZPoly prefactor;
  std::vector<std::pair<int, ZFraction>> sums;  // (m, S_{m,s})
  int n_max;
};

Report check_expansion(const Expansion& e, int h) {
  Report rep;
  ZPoly bracket_num;
  ZPoly den(1);
  bool have_den = false;
  for (const auto& [m, s] : e.sums) {
    if (!have_den) {
      den = s.den;
      have_den = true;
    }
    ZPoly term = s.num.shifted(2 * m);
    bracket_num = m % 2 ? bracket_num - term : bracket_num + term;
  }
  if (!have_den) den = e.prefactor;  // no nested sums: bracket is 1
  rep.rows.push_back(
      row(e.lemma_i, h, e.target * den - e.prefactor * (den + bracket_num)));

  const std::size_t order = static_cast<std::size_t>(e.n_max) + 1;
  std::vector<std::pair<int, ZSeries>> series;
  for (const auto& [m, s] : e.sums) series.emplace_back(m, s.to_series(order));
  for (int n = 0; n <= e.n_max; ++n) {
    QRatFn v = e.prefactor.coeff(n);
    for (const auto& [m, s] : series) {
      for (int k = 0; k <= n; ++k) {
        const QRatFn t = e.prefactor.coeff(n - k) * series_coeff(s, k - 2 * m);
        if (m % 2) v -= t;
        else v += t;
      }
    }
    rep.rows.push_back(row(e.lemma_ii, h, n, e.target.coeff(n) - v));
  }
  return rep;
}

}  // namespace

Report verify_triangle_products(const JFractionSpec& spec, int h) {
  Report rep;
  StirlingQTriangle t(spec.c, h);
  const ZPoly prod = linear_product(spec.c, 1, h);
  for (int k = 0; k <= h; ++k) {
    rep.rows.push_back(row("triangle_products", h, k, t.entry(h, k) - prod.coeff(k)));
  }
  return rep;
}

Report verify_Qh_expansion(const JFractionSpec& spec, int h) {
  Expansion e{"Q_expansion_i", "Q_expansion_ii", convergents(spec, h).Q,
              linear_product(spec.c, 1, h), {}, h};
  for (int m = 1; m <= h / 2; ++m) {
    for (int s = 0; s <= m * h; ++s) {
      ZFraction f = nested_sum(spec, {h, m, s, NestedVariant::denominator});
      if (!f.is_zero()) e.sums.emplace_back(m, std::move(f));
    }
  }
  return check_expansion(e, h);
}

Report verify_Ph_expansion(const JFractionSpec& spec, int h) {
  Report rep;
  const ZPoly P = convergents(spec, h).P;
  rep.rows.push_back(row("P_shift_rule", h, P - convergents(spec.shifted(), h - 1).Q));

  Expansion e{"P_expansion_i", "P_expansion_ii", P, linear_product(spec.c, 2, h), {}, h - 1};
  for (int m = 1; m <= h / 2; ++m) {
    for (int s = 0; s <= m * (h + 2) - 2; ++s) {
      ZFraction f = nested_sum(spec, {h - 1, m, s, NestedVariant::numerator_shifted});
      if (!f.is_zero()) e.sums.emplace_back(m, std::move(f));
    }
  }
  rep.append(check_expansion(e, h));

  // The displayed recurrence for the numerator triangle multiplies by c_{h+1};
  // started from the empty product it does not reproduce the product form.
  std::vector<QRatFn> rec{QRatFn(1)};
  for (int j = 2; j <= h; ++j) {
    std::vector<QRatFn> next(rec.size() + 1);
    for (std::size_t k = 0; k < next.size(); ++k) {
      QRatFn v = k < rec.size() ? rec[k] : QRatFn(0);
      if (k >= 1) v -= spec.c(j + 1) * rec[k - 1];
      next[k] = v;
    }
    rec = std::move(next);
  }
  const ZPoly prod = e.prefactor;
  for (int k = 0; k < h; ++k) {
    CheckRow r = row("P_triangle_displayed_recurrence", h, k, rec[k] - prod.coeff(k), false);
    r.note = "recurrence with c_{h+1} against [z^k](1-c_2 z)...(1-c_h z)";
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report verify_claim_relations(const JFractionSpec& spec, int h) {
  Report rep;
  StirlingQTriangle t(spec.c, h);
  const QRatFn diff = spec.c(1) - spec.c(h);
  for (int k = 1; k <= h; ++k) {
    const QRatFn lhs = product_coefficient(spec.c, 2, h, k);
    // Unsigned e_{k-1}(c_2, ..., c_h): the sum over i_1 < ... < i_{k-1} < h.
    const QRatFn sign = (k - 1) % 2 ? QRatFn(-1) : QRatFn(1);
    const QRatFn sum_form = sign * product_coefficient(spec.c, 2, h, k - 1);
    const QRatFn prod_form = product_coefficient(spec.c, 2, h - 1, k - 1);
    rep.rows.push_back(
        row("claim_coefficients_sum_form", h, k, lhs - (t.entry(h - 1, k) + diff * sum_form), false));
    rep.rows.push_back(row("claim_coefficients_product_form", h, k,
                           lhs - (t.entry(h - 1, k) + diff * prod_form), false));
  }
  for (int m = 1; 2 * m <= h; ++m) {
    for (int s = 0; s <= h; ++s) {
      ZFraction lhs = nested_sum(spec, {h - 1, m, s, NestedVariant::denominator}) -
                      nested_sum(spec, {h, m, s, NestedVariant::numerator_shifted});
      // Right side: strictly increasing indices in [2, h] summing to s, no gap rule.
      ZFraction rhs;
      std::vector<int> idx;
      std::function<void(int, int)> walk = [&](int start, int remaining) {
        if (static_cast<int>(idx.size()) == m) {
          if (remaining != 0) return;
          ZFraction term{ZPoly(1), ZPoly(1)};
          for (int i : idx) {
            term.num = term.num.scaled(spec.ab(i));
            term.den = term.den * ZPoly::one_minus(spec.c(i - 1)) * ZPoly::one_minus(spec.c(i));
          }
          rhs = rhs + term;
          return;
        }
        for (int i = start; i <= h && i <= remaining; ++i) {
          idx.push_back(i);
          walk(i + 1, remaining - i);
          idx.pop_back();
        }
      };
      walk(2, s);
      CheckRow r = row("claim_nested_difference", h, s, lhs - rhs, false);
      r.note = "m=" + std::to_string(m);
      rep.rows.push_back(std::move(r));
    }
  }
  return rep;
}

Report verify_PQ_coefficient_relation(const JFractionSpec& spec, int h) {
  Report rep;
  const ConvergentPair pair = convergents(spec, h);
  const QRatFn one(1), q = QRatFn::q();
  for (int n = 0; n < h; ++n) {
    QRatFn v(0);
    for (int i = 0; i <= n; ++i) {
      v += pair.Q.coeff(i) * (one - q) / (one - QRatFn::monomial(1, n + 1 - i));
    }
    rep.rows.push_back(row("PQ_coefficient_relation", h, n, pair.P.coeff(n) - v));
  }
  return rep;
}

Report first_column_formula_check(int h) {
  const QRatFn one(1), two(2), q = QRatFn::q();
  QRatFn f = -one / (one + q);
  const QRatFn cubic = q * q * q + two * q * q - QRatFn(3) * q - two;
  for (int k = 0; k <= h - 2; ++k) {
    const QRatFn a2 = QRatFn::monomial(1, k + 2), a1 = QRatFn::monomial(1, k + 1);
    f += q / (two * (one - a2)) - cubic / (two * (q * q - one) * (one + a2)) -
         one / (two * (one + q) * (one - a1)) - (two * q - QRatFn(3)) / (two * (one - q) * (one + a1));
  }
  Report rep;
  for (CForm form : {CForm::corrected, CForm::as_printed}) {
    StirlingQTriangle t(pochhammer_spec({q, q * q}, form).c, h);
    CheckRow r = row("first_column_formula", h, 1, t.entry(h, 1) - f, false);
    r.note = form == CForm::corrected ? "triangle of the corrected c_i" : "triangle of the printed c_i";
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report newton_girard_report(const JFractionSpec& spec, int h) {
  Report rep;
  for (int k = 0; k <= h; ++k) {
    const auto r = newton_girard_check(spec.c, h, k);
    CheckRow lit = row("newton_girard_literal", h, k, r.residual_literal, false);
    lit.note = "index m-k, signed entries";
    CheckRow adp = row("newton_girard_adopted", h, k, r.residual_adopted, false);
    adp.note = "index k-m, unsigned elementary symmetric functions";
    rep.rows.push_back(std::move(lit));
    rep.rows.push_back(std::move(adp));
  }
  return rep;
}

Report verify_all_lemmas(const JFractionSpec& spec, int h, bool qq2_family) {
  Report rep = verify_triangle_products(spec, h);
  if (h >= 2) {
    rep.append(verify_Qh_expansion(spec, h));
    rep.append(verify_Ph_expansion(spec, h));
    rep.append(verify_claim_relations(spec, h));
  }
  rep.append(newton_girard_report(spec, h));
  if (qq2_family) {
    rep.append(verify_PQ_coefficient_relation(spec, h));
    rep.append(first_column_formula_check(h));
  }
  return rep;
}

}  // namespace qjfrac
