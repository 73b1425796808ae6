#include <map>

#include "qjfrac/jfraction.hpp"

namespace qjfrac {

namespace {

QRatFn qpow(int k) { return QRatFn::monomial(1, k); }

// [n]_q = (1 - q^n)/(1 - q)
QRatFn qint(int n) { return (QRatFn(1) - qpow(n)) / (QRatFn(1) - qpow(1)); }

const std::map<std::string, Table1Row>& row_names() {
  static const std::map<std::string, Table1Row> names{
      {"pochhammer_a", Table1Row::pochhammer_a},
      {"reciprocal_qq", Table1Row::reciprocal_qq},
      {"q_binom2_over_qq", Table1Row::q_binom2_over_qq},
      {"pochhammer_zqn", Table1Row::pochhammer_zqn},
      {"reciprocal_pochhammer_zqn", Table1Row::reciprocal_pochhammer_zqn},
      {"pochhammer_ratio", Table1Row::pochhammer_ratio},
  };
  return names;
}

}  // namespace

std::optional<Table1Row> table1_row_from_name(const std::string& name) {
  auto it = row_names().find(name);
  if (it == row_names().end()) return std::nullopt;
  return it->second;
}

std::string table1_row_name(Table1Row row) {
  for (const auto& [k, v] : row_names()) {
    if (v == row) return k;
  }
  return "?";
}

JFractionSpec table1_preset(Table1Row row, const Table1Params& params) {
  const QRatFn one(1), q = QRatFn::q();
  const QRatFn a = params.a, b = params.b, z = params.z;
  const bool printed = params.as_printed;
  JFractionSpec s;
  s.name = table1_row_name(row);
  switch (row) {
    case Table1Row::pochhammer_a:
      s.c = [=](int h) {
        if (h == 1) return one - a;
        return qpow(h - 1) - a * qpow(h - 2) * (qpow(h) + qpow(h - 1) - one);
      };
      s.ab = [=](int h) {
        return a * qpow(2 * h - 4) * (a * qpow(h - 2) - one) * (qpow(h - 1) - one);
      };
      break;
    case Table1Row::reciprocal_qq:
      s.c = [=](int h) {
        if (h == 1) return one / (one - q);
        return qpow(h - 1) * (qpow(h - 1) * qint(h - 1) - qint(h - 2)) /
               (qint(2 * h - 3) * (qpow(2 * h - 1) - one));
      };
      s.ab = [=](int h) {
        // The general display doubles ab_2.
        if (h == 2 && !printed) return -q / (pow(one - q, 2) * (one + q));
        return -qpow(3 * h - 5) / (pow(qpow(2 * h - 3) - one, 2) *
                                   (one + qpow(h - 2) + qpow(h - 1) + qpow(2 * h - 3)));
      };
      break;
    case Table1Row::q_binom2_over_qq:
      throw AmbiguousRow(
          "row q^{n(n-1)/2}/(q;q)_n is ambiguous in source: its c_h uses an undefined "
          "first-column coefficient");
    case Table1Row::pochhammer_zqn:
      s.c = [=](int h) {
        if (h == 1) return (q - z) / q;
        return (qpow(h) - z - q * z + qpow(h) * z) / qpow(2 * h - 1);
      };
      s.ab = [=](int h) {
        return (qpow(h - 1) - one) * (qpow(h - 1) - z) * z / qpow(4 * h - 5);
      };
      break;
    case Table1Row::reciprocal_pochhammer_zqn:
      s.c = [=](int h) {
        if (h == 1) return q / (q - z);
        // Displayed with +q^{h-1} z; the expansion needs -q^{h-1} z.
        const QRatFn mid = printed ? qpow(h - 1) * z : -qpow(h - 1) * z;
        return qpow(h - 1) * (qpow(2 * h - 2) + z + mid - qpow(h) * z) /
               ((qpow(2 * h - 3) - z) * (qpow(2 * h - 1) - z));
      };
      s.ab = [=](int h) {
        return qint(h - 1) * qpow(3 * h - 4) * (one - q) * (qpow(h - 2) - z) * z /
               ((qpow(2 * h - 4) - z) * pow(qpow(2 * h - 3) - z, 2) * (qpow(2 * h - 2) - z));
      };
      break;
    case Table1Row::pochhammer_ratio:
      s = pochhammer_spec({a, b}, printed ? CForm::as_printed : CForm::corrected);
      s.name = table1_row_name(row);
      break;
  }
  return s;
}

ZSeries table1_target(Table1Row row, const Table1Params& params, std::size_t order) {
  const QRatFn one(1);
  ZSeries t(order);
  QRatFn num(1), den(1);
  for (std::size_t n = 0; n < order; ++n) {
    const int k = static_cast<int>(n);
    switch (row) {
      case Table1Row::pochhammer_a:
        t[n] = num;
        num *= one - params.a * qpow(k);
        break;
      case Table1Row::reciprocal_qq:
        t[n] = num.inverse();
        num *= one - qpow(k + 1);
        break;
      case Table1Row::q_binom2_over_qq:
        t[n] = qpow(k * (k - 1) / 2) / num;
        num *= one - qpow(k + 1);
        break;
      case Table1Row::pochhammer_zqn:
      case Table1Row::reciprocal_pochhammer_zqn: {
        // (z q^{-n}; q)_n = (1 - z q^{-1}) ... (1 - z q^{-n})
        QRatFn p(1);
        for (int j = 1; j <= k; ++j) p *= one - params.z * qpow(-j);
        t[n] = row == Table1Row::pochhammer_zqn ? p : p.inverse();
        break;
      }
      case Table1Row::pochhammer_ratio:
        t[n] = num / den;
        num *= one - params.a * qpow(k);
        den *= one - params.b * qpow(k);
        break;
    }
  }
  return t;
}

std::optional<JFractionSpec> named_preset(const std::string& name) {
  const QRatFn q = QRatFn::q();
  if (name == "qq2") {
    auto s = pochhammer_spec({q, q * q});
    s.name = name;
    return s.memoized();
  }
  if (name == "qq2_printed") {
    auto s = pochhammer_spec({q, q * q}, CForm::as_printed);
    s.name = name;
    return s.memoized();
  }
  if (name == "qq") {
    auto s = pochhammer_spec({q, q});
    s.name = name;
    return s;
  }
  if (auto row = table1_row_from_name(name)) return table1_preset(*row).memoized();
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names{"qq2", "qq2_printed", "qq"};
  for (const auto& [k, v] : row_names()) {
    if (v != Table1Row::q_binom2_over_qq) names.push_back(k);
  }
  return names;
}

}  // namespace qjfrac
