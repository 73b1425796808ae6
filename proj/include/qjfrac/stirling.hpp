#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qjfrac/jfraction.hpp"
#include "qjfrac/zpoly.hpp"

namespace qjfrac {

using Sequence = std::function<QRatFn(int)>;

/// entry(h, k) = entry(h-1, k) - c_h entry(h-1, k-1), entry(0, 0) = 1: the
/// coefficients of (1 - c_1 z)...(1 - c_h z).
class StirlingQTriangle {
 public:
  StirlingQTriangle(Sequence c, int h_max);

  int h_max() const { return static_cast<int>(rows_.size()) - 1; }
  /// Zero for k < 0 or k > h; throws std::out_of_range for h > h_max.
  QRatFn entry(int h, int k) const;
  const std::vector<QRatFn>& row(int h) const { return rows_.at(h); }

 private:
  std::vector<std::vector<QRatFn>> rows_;
};

StirlingQTriangle triangle(const JFractionSpec& spec, int h_max);

/// [z^k] (1 - c_from z)(1 - c_{from+1} z)...(1 - c_to z); an empty product is 1.
QRatFn product_coefficient(const Sequence& c, int from, int to, int k);
/// [z^k](1 - c_1 z)...(1 - c_h z).
QRatFn triangle_via_products(const Sequence& c, int h, int k);
/// (1 - c_from z)...(1 - c_to z)
ZPoly linear_product(const Sequence& c, int from, int to);

/// One line of a verification report.
struct CheckRow {
  std::string lemma;
  int h = 0;
  std::optional<int> n;
  bool ok = false;
  std::string residual;
  std::string note;
  /// Measured rows (conjectures, displayed formulas under test) do not affect
  /// Report::ok().
  bool asserted = true;
};

struct Report {
  std::vector<CheckRow> rows;
  /// True when every asserted row passed.
  bool ok() const;
  void append(const Report& other);
  /// First failing row, if any.
  std::optional<CheckRow> first_failure() const;
};

nlohmann::json to_json(const CheckRow& row);
nlohmann::json to_json(const Report& report);

/// Power-sum relation between S_m = sum c_j^m and the triangle, under two index
/// readings. "literal": (-1)^k k T(h,k) + sum_m (-1)^{k-m} S_m T(h,m-k);
/// "unsigned_k_minus_m": the same display with T(h,k-m) and T read as the
/// unsigned elementary symmetric functions (-1)^k entry(h,k). Only the second is
/// expected to vanish.
struct NewtonGirardResult {
  QRatFn residual_literal;
  QRatFn residual_adopted;
};
NewtonGirardResult newton_girard_check(const Sequence& c, int h, int k);

enum class NestedVariant { denominator, numerator_shifted };

struct NestedSumSpec {
  int h = 2;
  int m = 1;
  int s = 0;
  NestedVariant variant = NestedVariant::denominator;
};

/// denominator: sum over 2 <= k_1, k_{j+1} >= k_j + 2, k_m <= h, sum k = s of
///   prod ab_{k_j}/((1 - c_{k_j - 1} z)(1 - c_{k_j} z)),
/// over the common denominator (1 - c_1 z)...(1 - c_h z).
/// numerator_shifted: same index set with sum k = s - m and factors
///   ab_{k_j + 1}/((1 - c_{k_j} z)(1 - c_{k_j + 1} z)),
/// over the common denominator (1 - c_2 z)...(1 - c_{h+1} z).
ZFraction nested_sum(const JFractionSpec& spec, const NestedSumSpec& s);

/// Index tuples of a nested sum (k_1 < ... < k_m with gaps >= 2, 2 <= k_1,
/// k_m <= h, sum = target).
std::vector<std::vector<int>> nested_index_tuples(int h, int m, int target);

/// Denominator expansion (i) as a polynomial identity and (ii) for 0 <= n <= h.
Report verify_Qh_expansion(const JFractionSpec& spec, int h);
/// P_h equals Q_{h-1} of the shifted spec; numerator expansion (i) and (ii).
Report verify_Ph_expansion(const JFractionSpec& spec, int h);
/// entry(h, k) against the product coefficient for all 0 <= k <= h.
Report verify_triangle_products(const JFractionSpec& spec, int h);
/// Both forms of the coefficient relation for 1 <= k <= h, plus the nested-sum
/// difference for all 1 <= m <= h/2, 0 <= s <= h. Residuals only; rows are
/// marked ok when the residual vanishes.
Report verify_claim_relations(const JFractionSpec& spec, int h);
/// [z^n] P_h = sum_i [z^i] Q_h (1-q)/(1-q^{n+1-i}) for 0 <= n < h, spec (q, q^2).
Report verify_PQ_coefficient_relation(const JFractionSpec& spec, int h);
/// Displayed finite-sum formula for entry(h, 1) of the (q, q^2) triangle, compared
/// with the triangles of both c_i forms.
Report first_column_formula_check(int h);
/// Newton-Girard residuals for 0 <= k <= h under both readings.
Report newton_girard_report(const JFractionSpec& spec, int h);

/// Every lemma check above for depth h. The (q, q^2)-specific checks are
/// included when `qq2_family` is set.
Report verify_all_lemmas(const JFractionSpec& spec, int h, bool qq2_family);

}  // namespace qjfrac
