#include <doctest.h>

#include "qjfrac/stirling.hpp"
#include "test_support.hpp"

using namespace qjfrac;
using qjfrac::testing::Gen;
using qjfrac::testing::Q;

namespace {

const QRatFn q = QRatFn::q();

JFractionSpec random_spec(Gen& g, int h) {
  std::vector<QRatFn> c, ab;
  for (int i = 1; i <= h + 1; ++i) c.push_back(g.nonzero_rational(7, 5));
  for (int i = 2; i <= h + 1; ++i) ab.push_back(g.nonzero_rational(7, 5));
  return JFractionSpec::tabulated("random", c, ab);
}

JFractionSpec qq2() { return pochhammer_spec({q, q * q}).memoized(); }

bool all_zero(const Report& rep, const std::string& lemma) {
  bool seen = false;
  for (const auto& r : rep.rows) {
    if (r.lemma != lemma) continue;
    seen = true;
    if (!r.ok) return false;
  }
  return seen;
}

}  // namespace

TEST_CASE("triangle basics") {
  Gen g(1);
  auto s = random_spec(g, 8);
  auto t = triangle(s, 8);
  CHECK(t.entry(0, 0).is_one());
  CHECK(t.entry(3, 4).is_zero());
  CHECK(t.entry(3, -1).is_zero());
  for (int h = 1; h <= 8; ++h) {
    QRatFn sum(0);
    for (int i = 1; i <= h; ++i) sum += s.c(i);
    CHECK(t.entry(h, 1) == -sum);
  }
  const QRatFn c1 = s.c(1), c2 = s.c(2), c3 = s.c(3);
  CHECK(t.entry(3, 2) == c1 * c2 + c1 * c3 + c2 * c3);
  CHECK(t.entry(2, 2) == c1 * c2);
  CHECK_THROWS_AS(t.entry(9, 1), std::out_of_range);
}

TEST_CASE("triangle equals product coefficients") {
  Gen g(2);
  for (const auto& s : {random_spec(g, 8), qq2()}) {
    auto t = triangle(s, 8);
    for (int h = 0; h <= 8; ++h) {
      for (int k = 0; k <= h; ++k) CHECK(t.entry(h, k) == triangle_via_products(s.c, h, k));
      // Row sum is the product at z = 1.
      QRatFn row(0), prod(1);
      for (int k = 0; k <= h; ++k) row += t.entry(h, k);
      for (int i = 1; i <= h; ++i) prod *= QRatFn(1) - s.c(i);
      CHECK(row == prod);
    }
  }
  CHECK(triangle_via_products(qq2().c, 0, 0).is_one());
}

TEST_CASE("degenerate c-sequence") {
  auto zero = JFractionSpec::tabulated("zero", std::vector<QRatFn>(7, QRatFn(0)),
                                       {Q("2"), Q("-1/3"), Q("5"), Q("1/2"), Q("3"), Q("7")});
  auto t = triangle(zero, 6);
  for (int h = 0; h <= 6; ++h) {
    for (int k = 0; k <= h; ++k) CHECK(t.entry(h, k) == QRatFn(k == 0 ? 1 : 0));
    const ZPoly Q = convergents(zero, h).Q;
    for (int i = 1; i <= Q.degree(); i += 2) CHECK(Q.coeff(i).is_zero());
  }
}

TEST_CASE("Newton-Girard readings") {
  Gen g(3);
  auto s = random_spec(g, 6);
  CHECK(newton_girard_check(s.c, 4, 0).residual_adopted.is_zero());
  CHECK(newton_girard_check(s.c, 4, 0).residual_literal.is_zero());
  for (int h = 1; h <= 6; ++h) {
    for (int k = 0; k <= h; ++k) CHECK(newton_girard_check(s.c, h, k).residual_adopted.is_zero());
  }
  CHECK_FALSE(newton_girard_check(s.c, 3, 2).residual_literal.is_zero());
  CHECK(newton_girard_check(qq2().c, 3, 2).residual_adopted.is_zero());
}

TEST_CASE("nested sum index sets") {
  CHECK(nested_index_tuples(4, 2, 6) == std::vector<std::vector<int>>{{2, 4}});
  CHECK(nested_index_tuples(6, 2, 8) == std::vector<std::vector<int>>{{2, 6}, {3, 5}});
  CHECK(nested_index_tuples(5, 1, 6).empty());
  CHECK(nested_index_tuples(6, 3, 12) == std::vector<std::vector<int>>{{2, 4, 6}});
}

TEST_CASE("nested sums") {
  Gen g(4);
  auto s = random_spec(g, 6);
  auto frac = [](const QRatFn& num, ZPoly den) { return ZFraction{ZPoly(num), std::move(den)}; };
  for (int h = 2; h <= 5; ++h) {
    for (int sv = 0; sv <= h + 2; ++sv) {
      ZFraction got = nested_sum(s, {h, 1, sv});
      if (sv >= 2 && sv <= h) {
        CHECK(got.equals(frac(s.ab(sv), ZPoly::one_minus(s.c(sv - 1)) * ZPoly::one_minus(s.c(sv)))));
      } else {
        CHECK(got.is_zero());
      }
    }
  }
  CHECK(nested_sum(s, {4, 2, 9}).is_zero());
  ZFraction pair = nested_sum(s, {4, 2, 6});
  ZPoly den(1);
  for (int i = 1; i <= 4; ++i) den = den * ZPoly::one_minus(s.c(i));
  CHECK(pair.equals(frac(s.ab(2) * s.ab(4), den)));
}

TEST_CASE("denominator expansion") {
  Gen g(5);
  // h = 2 by hand.
  auto s = random_spec(g, 6);
  const ZPoly prod = ZPoly::one_minus(s.c(1)) * ZPoly::one_minus(s.c(2));
  CHECK(convergents(s, 2).Q == prod - ZPoly::monomial(s.ab(2), 2));
  for (int h = 2; h <= 6; ++h) {
    CAPTURE(h);
    CHECK(verify_Qh_expansion(s, h).ok());
  }
  CHECK(verify_Qh_expansion(qq2(), 4).ok());
}

TEST_CASE("numerator expansion") {
  Gen g(6);
  auto s = random_spec(g, 6);
  for (int h = 2; h <= 6; ++h) {
    CAPTURE(h);
    auto rep = verify_Ph_expansion(s, h);
    CHECK(rep.ok());
    CHECK(all_zero(rep, "P_shift_rule"));
    CHECK(all_zero(rep, "P_expansion_i"));
    CHECK(all_zero(rep, "P_expansion_ii"));
  }
  auto seq = convergent_sequence(qq2(), 2);
  CHECK(seq[1].P == ZPoly(1));
  CHECK(seq[2].P.coeff(1) == Q("-2*q*(1-q)/(1-q^4)"));
}

TEST_CASE("coefficient relation for (q, q^2)") {
  auto rep = verify_PQ_coefficient_relation(qq2(), 5);
  CHECK(rep.ok());
  CHECK(rep.rows.size() == 5);
  auto two = verify_PQ_coefficient_relation(qq2(), 2);
  CHECK(two.ok());
  // n = 1, h = 2 equals P_2's z-coefficient.
  const QRatFn one(1);
  auto pair = convergents(qq2(), 2);
  CHECK(pair.Q.coeff(0) * (one - q) / (one - q * q) + pair.Q.coeff(1) == Q("-2*q*(1-q)/(1-q^4)"));
}

TEST_CASE("claim relations are measured") {
  Gen g(7);
  auto s = random_spec(g, 6);
  auto rep = verify_claim_relations(s, 4);
  CHECK(rep.ok());  // nothing asserted
  CHECK(all_zero(rep, "claim_coefficients_product_form"));
  for (const auto& r : rep.rows) {
    CHECK_FALSE(r.asserted);
    if (r.lemma == "claim_coefficients_sum_form" && r.n == 1) CHECK(r.ok);
    if (r.lemma == "claim_nested_difference" && r.n == 3 && r.note == "m=1") {
      // Brute force: S_{3,1,3} and S^[P]_{4,1,3} are both ab_3/((1-c_2 z)(1-c_3 z)),
      // so the left side vanishes while the right side is that same term.
      CHECK_FALSE(r.ok);
    }
  }
  ZFraction lhs = nested_sum(s, {3, 1, 3}) - nested_sum(s, {4, 1, 3, NestedVariant::numerator_shifted});
  CHECK(lhs.is_zero());
}

TEST_CASE("first-column formula") {
  for (int h = 1; h <= 2; ++h) {
    for (const auto& r : first_column_formula_check(h).rows) CHECK(r.ok);
  }
  auto rep = first_column_formula_check(4);
  REQUIRE(rep.rows.size() == 2);
  CHECK_FALSE(rep.rows[0].ok);  // corrected c_i
  CHECK(rep.rows[1].ok);        // printed c_i
}

TEST_CASE("report JSON") {
  auto rep = verify_all_lemmas(qq2(), 3, true);
  auto j = to_json(rep);
  REQUIRE(j.is_array());
  CHECK(j.size() == rep.rows.size());
  for (const auto& row : j) {
    CHECK(row.contains("lemma"));
    CHECK(row.contains("h"));
    CHECK(row.contains("n"));
    CHECK(row.contains("residual"));
    const std::string st = row.at("status");
    CHECK((st == "pass" || st == "fail" || st == "zero" || st == "nonzero"));
  }
  CHECK(rep.ok());
  CHECK_FALSE(rep.first_failure().has_value());
}
