#include "qjfrac/jfraction.hpp"

namespace qjfrac {

namespace {

// Drop the constant term (assumed zero) and divide by z.
ZSeries divide_by_z(const ZSeries& s) {
  std::vector<QRatFn> v(s.coeffs().begin() + 1, s.coeffs().end());
  return ZSeries(std::move(v));
}

}  // namespace

Inversion series_to_jfraction(const ZSeries& target, int depth) {
  if (target.order() < 2 * static_cast<std::size_t>(depth)) {
    throw std::invalid_argument("target order must be at least 2 * depth");
  }
  if (depth < 1) return {};
  if (!target[0].is_one()) throw std::invalid_argument("target must have constant term 1");
  Inversion out;
  ZSeries r = target;
  for (int k = 1; k <= depth; ++k) {
    ZSeries u = divide_by_z(ZSeries::one(r.order()) - r.reciprocal());
    out.c.push_back(u[0]);
    if (k == depth) break;
    u[0] = QRatFn(0);
    const QRatFn ab = u[1];
    if (ab.is_zero()) {
      out.terminated = true;
      break;
    }
    out.ab.push_back(ab);
    r = divide_by_z(u).scaled(ab.inverse());
  }
  return out;
}

ZSeries power_over_lambert_target(int alpha, std::size_t order) {
  ZSeries t(order);
  if (order > 0) t[0] = QRatFn(1);
  for (std::size_t n = 1; n < order; ++n) {
    Rational npow = 1;
    for (int k = 0; k < alpha; ++k) npow *= static_cast<long>(n);
    t[n] = QRatFn(npow) / (QRatFn(1) - QRatFn::monomial(1, static_cast<int>(n)));
  }
  return t;
}

std::optional<ZSeries> named_target(const std::string& name, std::size_t order) {
  if (name == "one_over_1mqn") return power_over_lambert_target(0, order);
  if (name == "n_over_1mqn") return power_over_lambert_target(1, order);
  if (name == "n2_over_1mqn") return power_over_lambert_target(2, order);
  return std::nullopt;
}

}  // namespace qjfrac
