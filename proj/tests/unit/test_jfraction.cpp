#include <doctest.h>

#include "goldens.hpp"
#include "qjfrac/jfraction.hpp"
#include "qjfrac/oracles.hpp"
#include "test_support.hpp"

using namespace qjfrac;
using qjfrac::testing::Gen;
using qjfrac::testing::Q;

namespace {

const QRatFn q = QRatFn::q();

PochhammerParams random_params(Gen& g) {
  PochhammerParams p;
  do {
    p.a = g.nonzero_rational(5, 3);
    p.b = g.nonzero_rational(5, 3);
  } while (p.b == QRatFn(1) || p.a == p.b);
  return p;
}

// Symbolic stand-ins for generic c_i, ab_i: distinct small rationals.
JFractionSpec random_spec(Gen& g, int h) {
  std::vector<QRatFn> c, ab;
  for (int i = 1; i <= h; ++i) c.push_back(g.nonzero_rational(6, 5));
  for (int i = 2; i <= h; ++i) ab.push_back(g.nonzero_rational(6, 5));
  return JFractionSpec::tabulated("random", c, ab);
}

// Random spec whose entries are rational functions of q.
JFractionSpec random_q_spec(Gen& g, int h) {
  std::vector<QRatFn> c, ab;
  for (int i = 1; i <= h; ++i) c.push_back(g.nonzero_ratfn(2));
  for (int i = 2; i <= h; ++i) ab.push_back(g.nonzero_ratfn(2));
  return JFractionSpec::tabulated("random_q", c, ab);
}

}  // namespace

TEST_CASE("pochhammer spec for (q, q^2)") {
  auto s = pochhammer_spec({q, q * q});
  CHECK(s.c(1) == Q("1/(1+q)"));
  for (int i = 2; i <= 6; ++i) {
    // Simplified form 2 q^{i-1}/((1 + q^{i-1})(1 + q^i)).
    QRatFn expect = QRatFn(2) * QRatFn::monomial(1, i - 1) /
                    ((QRatFn(1) + QRatFn::monomial(1, i - 1)) * (QRatFn(1) + QRatFn::monomial(1, i)));
    CHECK(s.c(i) == expect);
  }
  CHECK_THROWS_AS(pochhammer_spec({q, QRatFn(1)}), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer_spec({QRatFn(0), q}), std::invalid_argument);
}

TEST_CASE("lambda_h for (q, q^2) factor by factor") {
  auto s = pochhammer_spec({q, q * q});
  const QRatFn one(1);
  for (int h = 1; h <= 7; ++h) {
    const int n = h - 1;
    QRatFn den(1);
    for (int k = 0; k < n; ++k) {
      den *= (one - QRatFn::monomial(1, 2 * k + 1)) * pow(one - QRatFn::monomial(1, 2 * k + 2), 2) *
             (one - QRatFn::monomial(1, 2 * k + 3));
    }
    QRatFn expect = QRatFn::monomial(1, n * n) * pow(oracle::q_pochhammer(q, n), 4) / den;
    CHECK(lambda(s, h) == expect);
  }
}

TEST_CASE("lambda closed form differs by q^{h-1}/a^{h-2}") {
  Gen g(8);
  for (int trial = 0; trial < 4; ++trial) {
    PochhammerParams p = random_params(g);
    auto s = pochhammer_spec(p);
    for (int h = 2; h <= 5; ++h) {
      CHECK(lambda_closed_form(p, h) ==
            lambda(s, h) * QRatFn::monomial(1, h - 1) / pow(p.a, h - 2));
    }
  }
}

TEST_CASE("convergent base cases") {
  auto s = pochhammer_spec({q, q * q});
  auto seq = convergent_sequence(s, 3);
  CHECK(seq[0].P.is_zero());
  CHECK(seq[0].Q == ZPoly(1));
  CHECK(seq[1].P == ZPoly(1));
  CHECK(seq[1].Q == ZPoly::one_minus(s.c(1)));
  // P_2(q, z) = 1 - 2q(1-q) z/(1-q^4)
  CHECK(seq[2].P == ZPoly(std::vector<QRatFn>{1, -Q("2*q*(1-q)/(1-q^4)")}));
  for (int h = 1; h <= 3; ++h) {
    CHECK(seq[h].Q.coeff(0).is_one());
    CHECK(seq[h].P.coeff(0).is_one());
    CHECK(seq[h].Q.degree() <= h);
    CHECK(seq[h].P.degree() <= h - 1);
  }
}

TEST_CASE("depth-2 expansion matches the generic four-term formula") {
  Gen g(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_q_spec(g, 2);
    auto j = convergent_coefficients(convergents(s, 2), 4);
    const QRatFn c1 = s.c(1), c2 = s.c(2), ab2 = s.ab(2);
    CHECK(j[0].is_one());
    CHECK(j[1] == c1);
    CHECK(j[2] == ab2 + c1 * c1);
    CHECK(j[3] == QRatFn(2) * ab2 * c1 + c1 * c1 * c1 + ab2 * c2);
  }
}

TEST_CASE("coefficient recurrence agrees with series division") {
  Gen g(5);
  for (int trial = 0; trial < 6; ++trial) {
    auto s = random_q_spec(g, 4);
    auto pair = convergents(s, 4);
    CHECK(convergent_coefficients(pair, 10) == convergent_coefficients_by_division(pair, 10));
  }
}

TEST_CASE("(q, q^2) coefficients are (1-q)/(1-q^{n+1})") {
  auto s = pochhammer_spec({q, q * q});
  auto j = convergent_coefficients(convergents(s, 4), 8);
  for (int n = 0; n < 8; ++n) {
    CHECK(j[n] == (QRatFn(1) - q) / (QRatFn(1) - QRatFn::monomial(1, n + 1)));
  }
}

TEST_CASE("a = b gives the constant sequence 1") {
  for (const QRatFn& a : {q, Q("3/2"), Q("q^2")}) {
    auto s = pochhammer_spec({a, a});
    auto j = convergent_coefficients(convergents(s, 4), 8);
    for (int n = 0; n < 8; ++n) CHECK(j[n].is_one());
  }
}

TEST_CASE("generic (a, b): coefficients equal the Pochhammer ratio") {
  Gen g(17);
  for (int trial = 0; trial < 5; ++trial) {
    PochhammerParams p = random_params(g);
    auto s = pochhammer_spec(p);
    auto j = convergent_coefficients(convergents(s, 3), 6);
    for (int n = 0; n < 6; ++n) {
      CHECK(j[n] == oracle::q_pochhammer(p.a, n) / oracle::q_pochhammer(p.b, n));
    }
  }
}

TEST_CASE("printed c_i reaches only n <= 4") {
  auto s = pochhammer_spec({q, q * q}, CForm::as_printed);
  CHECK(s.c(3) != pochhammer_spec({q, q * q}).c(3));
  auto j = convergent_coefficients(convergents(s, 4), 8);
  for (int n = 0; n <= 4; ++n) CHECK(j[n] == (QRatFn(1) - q) / (QRatFn(1) - QRatFn::monomial(1, n + 1)));
  CHECK(j[5] != (QRatFn(1) - q) / (QRatFn(1) - QRatFn::monomial(1, 6)));
}

TEST_CASE("sum decomposition") {
  auto s = pochhammer_spec({q, q * q});
  auto d1 = convergent_sum_decomposition(s, 1, true);
  REQUIRE(d1.terms.size() == 1);
  CHECK(d1.terms[0].lambda.is_one());
  CHECK(d1.sum_ok);

  for (int h = 1; h <= 4; ++h) {
    auto d = convergent_sum_decomposition(s, h, true);
    CHECK(d.telescoping_ok);
    CHECK(d.sum_ok);
    CHECK_FALSE(d.first_failure.has_value());
  }
  Gen g(99);
  auto r = random_q_spec(g, 4);
  auto d = convergent_sum_decomposition(r, 4, true);
  CHECK(d.telescoping_ok);
  CHECK(d.sum_ok);
}

TEST_CASE("inversion golden values") {
  for (int alpha : {0, 1, 2}) {
    CAPTURE(alpha);
    auto gold = qjfrac::testing::power_lambert_goldens(alpha);
    auto inv = series_to_jfraction(power_over_lambert_target(alpha, 6), 3);
    REQUIRE(inv.c.size() == 3);
    REQUIRE(inv.ab.size() == 2);
    CHECK(inv.c[0] == gold.c1);
    CHECK(inv.c[1] == gold.c2);
    CHECK(inv.c[2] == gold.c3);
    CHECK(inv.ab[0] == gold.ab2);
    CHECK(inv.ab[1] == gold.ab3);
  }
  auto one = series_to_jfraction(*named_target("one_over_1mqn", 4), 2);
  CHECK(one.ab[0] == Q("-2*q/((1-q)^2*(1+q))"));
  auto lin = series_to_jfraction(*named_target("n_over_1mqn", 4), 2);
  CHECK(lin.ab[0] == Q("(1-3*q)/((1-q)^2*(1+q))"));
  CHECK(lin.c[1] == Q("q*(-1-q+8*q^2)/((1-q)*(1-3*q)*(1+q+q^2))"));
}

TEST_CASE("explicit inversion values") {
  for (int alpha : {0, 1}) {
    CAPTURE(alpha);
    const auto gold = qjfrac::testing::explicit_lambert_goldens(alpha);
    const auto inv = series_to_jfraction(power_over_lambert_target(alpha, 6), 3);
    CHECK(inv.c[0] == gold.c1);
    CHECK(inv.c[1] == gold.c2);
    CHECK(inv.c[2] == gold.c3);
    CHECK(inv.ab[0] == gold.ab2);
    if (alpha == 0) {
      // the listed ab3 drops the square on 1+q+q^2
      CHECK(inv.ab[1] != gold.ab3);
      CHECK(inv.ab[1] * Q("1+q+q^2") == gold.ab3);
    } else {
      CHECK(inv.ab[1] == gold.ab3);
    }
  }
}

TEST_CASE("inversion round trip") {
  Gen g(123);
  for (int trial = 0; trial < 5; ++trial) {
    const int depth = 4;
    auto s = random_q_spec(g, depth);
    auto j = convergent_coefficients(convergents(s, depth), 2 * depth);
    auto inv = series_to_jfraction(j, depth);
    REQUIRE(inv.c.size() == depth);
    CHECK_FALSE(inv.terminated);
    for (int i = 1; i <= depth; ++i) CHECK(inv.c[i - 1] == s.c(i));
    for (int i = 2; i <= depth; ++i) CHECK(inv.ab[i - 2] == s.ab(i));
  }
}

TEST_CASE("inversion signals a terminating fraction") {
  // 1/(1 - z) has ab_2 = 0.
  ZSeries geo(std::vector<QRatFn>(6, QRatFn(1)));
  auto inv = series_to_jfraction(geo, 3);
  CHECK(inv.terminated);
  CHECK(inv.c.size() == 1);
  CHECK(inv.c[0].is_one());
  CHECK_THROWS_AS(series_to_jfraction(geo, 4), std::invalid_argument);
}

TEST_CASE("table presets match their targets") {
  const Table1Row rows[] = {Table1Row::pochhammer_a, Table1Row::reciprocal_qq,
                            Table1Row::pochhammer_zqn, Table1Row::reciprocal_pochhammer_zqn,
                            Table1Row::pochhammer_ratio};
  const Table1Params params[] = {Table1Params{}, Table1Params{Q("3/2"), Q("-2/5"), Q("5/3")}};
  for (auto row : rows) {
    for (const auto& p : params) {
      CAPTURE(table1_row_name(row));
      auto s = table1_preset(row, p);
      auto seq = convergent_sequence(s, 4);
      auto target = table1_target(row, p, 8);
      for (int h = 1; h <= 4; ++h) {
        auto j = convergent_coefficients(seq[h], 2 * h);
        for (int n = 0; n < 2 * h; ++n) CHECK(j[n] == target[n]);
      }
    }
  }
}

TEST_CASE("table entries as displayed") {
  const QRatFn a = Q("3/2");
  auto s = table1_preset(Table1Row::pochhammer_a, {a});
  CHECK(s.c(1) == QRatFn(1) - a);
  for (int h = 2; h <= 4; ++h) {
    CHECK(s.ab(h) == a * QRatFn::monomial(1, 2 * h - 4) * (a * QRatFn::monomial(1, h - 2) - 1) *
                         (QRatFn::monomial(1, h - 1) - 1));
  }
  CHECK(table1_preset(Table1Row::reciprocal_qq).c(1) == Q("1/(1-q)"));

  Table1Params printed;
  printed.as_printed = true;
  auto rq = table1_preset(Table1Row::reciprocal_qq, printed);
  CHECK(rq.ab(2) == Q("-q/(2*(1-q)^2*(1+q))"));
  CHECK(rq.ab(3) == table1_preset(Table1Row::reciprocal_qq).ab(3));

  // The ratio row as displayed repeats the printed Pochhammer family.
  auto ratio = table1_preset(Table1Row::pochhammer_ratio, printed);
  auto family = pochhammer_spec({q, q * q}, CForm::as_printed);
  for (int i = 1; i <= 4; ++i) CHECK(ratio.c(i) == family.c(i));
  for (int i = 2; i <= 4; ++i) CHECK(ratio.ab(i) == family.ab(i));

  CHECK_THROWS_AS(table1_preset(Table1Row::q_binom2_over_qq), AmbiguousRow);
}

TEST_CASE("substitution z -> q") {
  auto s = pochhammer_spec({q, q * q});
  auto pair = convergents(s, 4);
  QSeries direct = substitute_z_to_q(pair, 8);
  QSeries termwise = substitute_z_to_q(convergent_coefficients(pair, 8), 8);
  CHECK(direct == termwise);

  // Divided by (1 - q), coefficients 1..4 count divisors.
  QSeries d = direct * taylor(Q("1/(1-q)"), 8);
  const long divisors[] = {1, 2, 2, 3};
  for (int n = 1; n <= 4; ++n) CHECK(d[n - 1] == divisors[n - 1]);

  CHECK(substitute_z_to_q(pair, 5, QRatFn(0)) == QSeries::one(5));
  CHECK(substitute_z_to_q(convergents(s, 1), 1)[0] == 1);
}

TEST_CASE("spec JSON round trip") {
  auto s = pochhammer_spec({q, q * q});
  auto j = spec_to_json(s, 4);
  auto back = spec_from_json(j);
  for (int i = 1; i <= 4; ++i) CHECK(back.c(i) == s.c(i));
  for (int i = 2; i <= 4; ++i) CHECK(back.ab(i) == s.ab(i));
  CHECK(spec_to_json(back, 4) == j);
  CHECK_THROWS_AS(back.c(5), std::out_of_range);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::array()), ParseError);
}

TEST_CASE("shifted spec") {
  auto s = pochhammer_spec({q, q * q});
  auto t = s.shifted();
  CHECK(t.c(1) == s.c(2));
  CHECK(t.ab(2) == s.ab(3));
}

TEST_CASE("named presets") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    auto s = named_preset(name);
    REQUIRE(s.has_value());
    CHECK_NOTHROW(convergents(*s, 3));
  }
  CHECK_FALSE(named_preset("nope").has_value());
  CHECK_FALSE(named_target("nope", 4).has_value());
}
