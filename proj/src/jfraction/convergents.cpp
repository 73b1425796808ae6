#include "qjfrac/jfraction.hpp"

namespace qjfrac {

std::vector<ConvergentPair> convergent_sequence(const JFractionSpec& spec, int h_max) {
  std::vector<ConvergentPair> out;
  out.push_back({0, ZPoly(), ZPoly(1)});
  if (h_max < 1) return out;
  out.push_back({1, ZPoly(1), ZPoly::one_minus(spec.c(1))});
  for (int h = 2; h <= h_max; ++h) {
    const ZPoly lin = ZPoly::one_minus(spec.c(h));
    const ZPoly sq = ZPoly::monomial(spec.ab(h), 2);
    const auto& p1 = out[h - 1];
    const auto& p2 = out[h - 2];
    ConvergentPair next{h, lin * p1.P - sq * p2.P, lin * p1.Q - sq * p2.Q};
    out.push_back(std::move(next));
  }
  return out;
}

ConvergentPair convergents(const JFractionSpec& spec, int h) {
  return convergent_sequence(spec, h).back();
}

ZSeries convergent_coefficients(const ConvergentPair& pair, std::size_t order) {
  ZSeries j(order);
  const int dq = pair.Q.degree();
  for (std::size_t n = 0; n < order; ++n) {
    QRatFn v = pair.P.coeff(static_cast<int>(n));
    for (int i = 1; i <= std::min<int>(static_cast<int>(n), dq); ++i) {
      v -= pair.Q.coeff(i) * j[n - i];
    }
    j[n] = v;
  }
  return j;
}

ZSeries convergent_coefficients_by_division(const ConvergentPair& pair, std::size_t order) {
  return pair.P.to_series(order) * pair.Q.to_series(order).reciprocal();
}

Decomposition convergent_sum_decomposition(const JFractionSpec& spec, int h, bool clear_all) {
  const auto seq = convergent_sequence(spec, h);
  Decomposition d;
  QRatFn lam(1);
  for (int i = 1; i <= h; ++i) {
    if (i >= 2) lam *= spec.ab(i);
    d.terms.push_back({i, lam, seq[i - 1].Q, seq[i].Q});
    const ZPoly lhs = seq[i].P * seq[i - 1].Q - seq[i - 1].P * seq[i].Q;
    if (!(lhs == ZPoly::monomial(lam, 2 * i - 2)) && !d.first_failure) {
      d.telescoping_ok = false;
      d.first_failure = i;
    }
  }
  if (clear_all) {
    ZFraction sum{ZPoly(), ZPoly(1)};
    for (const auto& t : d.terms) {
      sum = sum + ZFraction{ZPoly::monomial(t.lambda, 2 * t.i - 2), t.Q_prev * t.Q_cur};
    }
    d.sum_ok = sum.equals(ZFraction{seq[h].P, seq[h].Q});
  } else {
    d.sum_ok = d.telescoping_ok;
  }
  return d;
}

QSeries substitute_z_to_q(const ConvergentPair& pair, std::size_t order, const QRatFn& mult) {
  return taylor(pair.P.eval(mult) / pair.Q.eval(mult), order);
}

QSeries substitute_z_to_q(const ZSeries& coeffs, std::size_t order, const QRatFn& mult) {
  QSeries acc(order);
  QRatFn power(1);
  for (std::size_t n = 0; n < std::min(order, coeffs.order()); ++n) {
    acc = acc + taylor(coeffs[n] * power, order);
    power *= mult;
  }
  if (coeffs.order() < order) acc = acc.truncated(coeffs.order());
  return acc;
}

}  // namespace qjfrac
