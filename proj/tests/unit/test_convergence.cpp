#include <doctest.h>

#include <random>

#include "qjfrac/convergence.hpp"
#include "qjfrac/jfraction.hpp"

using namespace qjfrac;

TEST_CASE("threshold radius") {
  const Real r = threshold_radius(Real("1e-10"));
  CHECK(abs(Complex(r - Real("0.206783"))) < Real("1e-5"));
  CHECK(threshold_function(Real("0.1")) > 0);
  CHECK(threshold_function(Real("0.3")) < 0);
  CHECK_THROWS_AS(threshold_radius(Real("1e-8"), Real("0.3"), Real("0.5")), std::runtime_error);
  CHECK_THROWS_AS(threshold_radius(Real(0)), std::invalid_argument);
}

TEST_CASE("numeric sequences agree with the exact ones") {
  const JFractionSpec spec = *named_preset("qq2");
  for (const char* x : {"0.3,0.2", "-0.15", "0.05,-0.1"}) {
    const Complex q = Complex::parse(x);
    for (int i = 1; i <= 7; ++i) {
      CHECK(abs(eval(spec.c(i), q) - qq2_c(q, i)) < Real("1e-30"));
      if (i >= 2) CHECK(abs(eval(spec.ab(i), q) - qq2_ab(q, i)) < Real("1e-30"));
    }
  }
}

TEST_CASE("complex parsing and arithmetic") {
  const Complex z = Complex::parse("0.5,-2");
  CHECK(z.re == Real("0.5"));
  CHECK(z.im == Real(-2));
  const Complex w = z * z / z;
  CHECK(abs(w - z) < Real("1e-30"));
  CHECK_THROWS_AS(Complex::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Complex(1) / Complex(0), std::domain_error);
  CHECK(abs(pow(z, -2) * pow(z, 2) - Complex(1)) < Real("1e-30"));
}

TEST_CASE("convergence probe") {
  const ProbeReport p = numeric_convergence_probe(Complex::parse("0.15"), Complex::parse("0.15"), 20);
  REQUIRE(p.rows.size() == 20);
  CHECK(p.rows.back().gap < Real("1e-10"));
  for (std::size_t i = 4; i < p.rows.size(); ++i) {
    CHECK(p.rows[i].gap <= p.rows[i - 1].gap + Real("1e-12"));
  }
  // z = 0: every convergent and the sum are 1.
  const ProbeReport z0 = numeric_convergence_probe(Complex::parse("0.15"), Complex(0), 4);
  for (const auto& r : z0.rows) CHECK(r.gap == 0);
  CHECK(abs(direct_sum(Complex(0), Complex(0)) - Complex(1)) == 0);
  CHECK(to_json(p)["rows"].size() == 20);
  CHECK_THROWS(direct_sum(Complex(2), Complex(0)));
}

TEST_CASE("Pringsheim margins are measured, not asserted") {
  const PringsheimReport r = pringsheim_margins(Complex::parse("0.1"), 50);
  REQUIRE(r.rows.size() == 49);
  CHECK(r.rows.front().h == 2);
  for (const auto& row : r.rows) CHECK(boost::multiprecision::isfinite(row.margin));
  // Precision is raised so that the tail margins do not round to zero.
  for (const auto& row : r.rows) CHECK(row.margin != 0);
  CHECK(r.precision_bits >= 128);
  const auto j = to_json(r);
  CHECK(j["rows"].size() == 49);
  CHECK(j["form"] == "displayed");
  const PringsheimReport s = pringsheim_margins(Complex::parse("0.5"), 10, PringsheimForm::sequences);
  CHECK(s.rows.size() == 9);
  CHECK_THROWS(pringsheim_margins(Complex(0), 10));
}

TEST_CASE("precision setting") {
  const unsigned before = precision_bits();
  set_precision_bits(256);
  CHECK(precision_bits() == 256);
  CHECK_THROWS(set_precision_bits(8));
  set_precision_bits(before);
}
