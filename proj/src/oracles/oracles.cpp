#include <stdexcept>

#include "qjfrac/oracles.hpp"

namespace qjfrac::oracle {

Integer sigma_alpha(int alpha, long n) {
  if (n < 1) throw std::invalid_argument("sigma_alpha needs n >= 1");
  Integer total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(alpha));
    total += p;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(alpha));
      total += p;
    }
  }
  return total;
}

QRatFn q_pochhammer(const QRatFn& x, int n) {
  QRatFn r(1);
  for (int k = 0; k < n; ++k) r *= QRatFn(1) - x * QRatFn::monomial(1, k);
  return r;
}

QSeries lambert_truncated(int alpha, std::size_t order) {
  QSeries s(order);
  for (std::size_t n = 1; n < order; ++n) {
    Rational w = 1;
    for (int k = 0; k < alpha; ++k) w *= static_cast<long>(n);
    for (std::size_t m = n; m < order; m += n) s[m] += w;
  }
  return s;
}

QPoly q_binomial(int n, int k, const QPoly& base) {
  if (k < 0 || k > n) return QPoly();
  // row[j] holds (m choose j) while m runs up to n.
  std::vector<QPoly> row{QPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPoly> next(m + 1);
    next[0] = QPoly(1);
    next[m] = QPoly(1);
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + pow(base, j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

BinomialTheoremCheck q_binomial_theorem_check(const QRatFn& a, const QRatFn& z,
                                              std::size_t order) {
  if (z.den().coeff(0) == 0 || z.num().coeff(0) != 0) {
    throw std::domain_error("z must be analytic and vanish at q = 0");
  }
  if (a.den().coeff(0) == 0) throw std::domain_error("a must be analytic at q = 0");
  const QRatFn one(1), q = QRatFn::q();
  BinomialTheoremCheck out;
  out.sum_side = QSeries(order);
  QRatFn ratio(1), zn(1);
  for (std::size_t n = 0; n < order; ++n) {
    out.sum_side = out.sum_side + taylor(ratio * zn, order);
    ratio *= (one - a * QRatFn::monomial(1, static_cast<int>(n))) /
             (one - QRatFn::monomial(1, static_cast<int>(n) + 1));
    zn *= z;
  }
  // Factor k is 1 + O(q^{k+1}); factors with k + 1 >= order are invisible.
  out.product_side = QSeries::one(order);
  for (std::size_t k = 0; k + 1 < order; ++k) {
    const QRatFn zk = z * QRatFn::monomial(1, static_cast<int>(k));
    out.product_side = out.product_side * taylor(one - a * zk, order) *
                       taylor(one - zk, order).reciprocal();
  }
  out.ok = out.sum_side == out.product_side;
  return out;
}

}  // namespace qjfrac::oracle
