#include <stdexcept>

#include "qjfrac/serialize.hpp"
#include "qjfrac/stirling.hpp"

namespace qjfrac {

StirlingQTriangle::StirlingQTriangle(Sequence c, int h_max) {
  rows_.push_back({QRatFn(1)});
  for (int h = 1; h <= h_max; ++h) {
    const QRatFn ch = c(h);
    const auto& prev = rows_.back();
    std::vector<QRatFn> row(h + 1);
    for (int k = 0; k <= h; ++k) {
      QRatFn v = k < h ? prev[k] : QRatFn(0);
      if (k >= 1) v -= ch * prev[k - 1];
      row[k] = v;
    }
    rows_.push_back(std::move(row));
  }
}

QRatFn StirlingQTriangle::entry(int h, int k) const {
  if (h < 0 || k < 0 || k > h) return QRatFn(0);
  return rows_.at(h)[k];
}

StirlingQTriangle triangle(const JFractionSpec& spec, int h_max) {
  return StirlingQTriangle(spec.c, h_max);
}

ZPoly linear_product(const Sequence& c, int from, int to) {
  ZPoly p(1);
  for (int i = from; i <= to; ++i) p = p * ZPoly::one_minus(c(i));
  return p;
}

QRatFn product_coefficient(const Sequence& c, int from, int to, int k) {
  return linear_product(c, from, to).coeff(k);
}

QRatFn triangle_via_products(const Sequence& c, int h, int k) {
  return product_coefficient(c, 1, h, k);
}

NewtonGirardResult newton_girard_check(const Sequence& c, int h, int k) {
  StirlingQTriangle t(c, h);
  auto power_sum = [&](int m) {
    QRatFn s(0);
    for (int j = 1; j <= h; ++j) s += pow(c(j), m);
    return s;
  };
  auto sign = [](int e) { return e % 2 == 0 ? QRatFn(1) : QRatFn(-1); };
  auto unsigned_e = [&](int j) { return sign(j) * t.entry(h, j); };

  NewtonGirardResult r;
  r.residual_literal = sign(k) * QRatFn(k) * t.entry(h, k);
  r.residual_adopted = sign(k) * QRatFn(k) * unsigned_e(k);
  for (int m = 1; m <= k; ++m) {
    const QRatFn pm = power_sum(m);
    r.residual_literal += sign(k - m) * pm * t.entry(h, m - k);
    r.residual_adopted += sign(k - m) * pm * unsigned_e(k - m);
  }
  return r;
}

bool Report::ok() const {
  for (const auto& r : rows) {
    if (r.asserted && !r.ok) return false;
  }
  return true;
}

void Report::append(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::optional<CheckRow> Report::first_failure() const {
  for (const auto& r : rows) {
    if (r.asserted && !r.ok) return r;
  }
  return std::nullopt;
}

nlohmann::json to_json(const CheckRow& row) {
  nlohmann::json j{{"lemma", row.lemma},
                   {"h", row.h},
                   {"n", row.n ? nlohmann::json(*row.n) : nlohmann::json(nullptr)},
                   {"status", row.asserted ? (row.ok ? "pass" : "fail")
                                           : (row.ok ? "zero" : "nonzero")},
                   {"residual", row.residual}};
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  return rows;
}

}  // namespace qjfrac
