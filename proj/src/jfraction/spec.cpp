#include <map>
#include <mutex>
#include <stdexcept>

#include "qjfrac/jfraction.hpp"
#include "qjfrac/serialize.hpp"

namespace qjfrac {

namespace {

QRatFn qpow(int k) { return QRatFn::monomial(1, k); }

// (x; q^step)_n
QRatFn pochhammer(const QRatFn& x, int step, int n) {
  QRatFn r(1);
  for (int k = 0; k < n; ++k) r *= QRatFn(1) - x * qpow(step * k);
  return r;
}

}  // namespace

JFractionSpec JFractionSpec::shifted(int by) const {
  JFractionSpec s;
  s.name = name + "+" + std::to_string(by);
  s.c = [c = c, by](int i) { return c(i + by); };
  s.ab = [ab = ab, by](int i) { return ab(i + by); };
  return s;
}

JFractionSpec JFractionSpec::memoized() const {
  struct Cache {
    std::mutex m;
    std::map<int, QRatFn> c, ab;
  };
  auto cache = std::make_shared<Cache>();
  auto lookup = [cache](std::map<int, QRatFn> Cache::*table, const std::function<QRatFn(int)>& f,
                        int i) {
    {
      std::lock_guard lock(cache->m);
      auto it = (cache.get()->*table).find(i);
      if (it != (cache.get()->*table).end()) return it->second;
    }
    QRatFn v = f(i);
    std::lock_guard lock(cache->m);
    (cache.get()->*table).emplace(i, v);
    return v;
  };
  JFractionSpec s;
  s.name = name;
  s.c = [lookup, f = c](int i) { return lookup(&Cache::c, f, i); };
  s.ab = [lookup, f = ab](int i) { return lookup(&Cache::ab, f, i); };
  return s;
}

JFractionSpec JFractionSpec::tabulated(std::string name, std::vector<QRatFn> c,
                                       std::vector<QRatFn> ab) {
  JFractionSpec s;
  s.name = std::move(name);
  s.c = [c = std::move(c)](int i) {
    if (i < 1 || i > static_cast<int>(c.size())) {
      throw std::out_of_range("c_" + std::to_string(i) + " not tabulated");
    }
    return c[i - 1];
  };
  s.ab = [ab = std::move(ab)](int i) {
    if (i < 2 || i > static_cast<int>(ab.size()) + 1) {
      throw std::out_of_range("ab_" + std::to_string(i) + " not tabulated");
    }
    return ab[i - 2];
  };
  return s;
}

nlohmann::json spec_to_json(const JFractionSpec& spec, int h) {
  nlohmann::json c = nlohmann::json::array(), ab = nlohmann::json::array();
  for (int i = 1; i <= h; ++i) c.push_back(to_json(spec.c(i)));
  for (int i = 2; i <= h; ++i) ab.push_back(to_json(spec.ab(i)));
  return {{"name", spec.name}, {"c", c}, {"ab", ab}};
}

JFractionSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("ab")) {
    throw ParseError("spec JSON needs \"c\" and \"ab\" arrays");
  }
  std::vector<QRatFn> c, ab;
  for (const auto& x : j.at("c")) c.push_back(qratfn_from_json(x));
  for (const auto& x : j.at("ab")) ab.push_back(qratfn_from_json(x));
  return JFractionSpec::tabulated(j.value("name", std::string("tabulated")), std::move(c),
                                  std::move(ab));
}

QRatFn lambda(const JFractionSpec& spec, int h) {
  QRatFn r(1);
  for (int i = 2; i <= h; ++i) r *= spec.ab(i);
  return r;
}

JFractionSpec pochhammer_spec(const PochhammerParams& p, CForm form) {
  if (p.a.is_zero() || p.b.is_zero()) throw std::invalid_argument("a and b must be nonzero");
  if (p.b == QRatFn(1)) throw std::invalid_argument("b = 1 puts a pole in c_1");
  const QRatFn a = p.a, b = p.b, one(1);
  JFractionSpec s;
  s.name = form == CForm::corrected ? "pochhammer" : "pochhammer_printed";
  s.c = [a, b, one, form](int i) -> QRatFn {
    if (i == 1) return (a - one) / (b - one);
    if (i < 1) return QRatFn(0);
    const QRatFn bterm = form == CForm::corrected ? b * qpow(i - 2) : b;
    QRatFn num = qpow(1) + a * b * qpow(2 * i - 3) + a * (one - qpow(i - 1) - qpow(i)) +
                 bterm * (qpow(i) - one - qpow(1));
    return qpow(i - 2) * num / ((one - b * qpow(2 * i - 4)) * (one - b * qpow(2 * i - 2)));
  };
  s.ab = [a, b, one](int i) -> QRatFn {
    QRatFn num = qpow(2 * i - 4) * (one - b * qpow(i - 3)) * (one - a * qpow(i - 2)) *
                 (a - b * qpow(i - 2)) * (one - qpow(i - 1));
    // a = b: the vanishing factor a - b q^{i-2} also cancels a pole at i = 2.
    if (num.is_zero()) return QRatFn(0);
    return num / ((one - b * qpow(2 * i - 5)) * pow(one - b * qpow(2 * i - 4), 2) *
                  (one - b * qpow(2 * i - 3)));
  };
  return s;
}

QRatFn lambda_closed_form(const PochhammerParams& p, int h) {
  const QRatFn& a = p.a;
  const QRatFn& b = p.b;
  const QRatFn q = QRatFn::q();
  const int n = h - 1;
  QRatFn num = a * qpow(n * n) * pochhammer(b / q, 1, n) * pochhammer(a, 1, n) *
               pochhammer(b / a, 1, n) * pochhammer(q, 1, n);
  QRatFn den = pochhammer(b / q, 2, n) * pow(pochhammer(b, 2, n), 2) * pochhammer(b * q, 2, n);
  return num / den;
}

}  // namespace qjfrac
