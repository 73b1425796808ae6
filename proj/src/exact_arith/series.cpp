#include "qjfrac/series.hpp"

namespace qjfrac {

QSeries taylor(const QPoly& p, std::size_t order) {
  return QSeries::truncate(p.coeffs(), order);
}

QSeries taylor(const QRatFn& f, std::size_t order) {
  const Rational d0 = f.den().coeff(0);
  if (d0 == 0) throw PoleAtZero("rational function has a pole at q = 0");
  // Long division by the denominator: den * s = num.
  const auto& den = f.den().coeffs();
  const Rational inv0 = 1 / d0;
  QSeries s(order);
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = f.num().coeff(static_cast<int>(n));
    for (std::size_t k = 1; k < den.size() && k <= n; ++k) acc -= den[k] * s[n - k];
    s[n] = acc * inv0;
  }
  return s;
}

}  // namespace qjfrac
