#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qjfrac");
  std::ostringstream out, err;
  const int code = qjfrac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("divisor table") {
  const auto r = run({"divisor", "table", "--alpha", "0", "--h", "5", "--order", "5"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["schema"] == "qjfrac.divisor.table/1");
  std::vector<std::string> values;
  for (const auto& row : j["rows"]) values.push_back(row["value"]);
  CHECK(values == std::vector<std::string>{"1", "2", "2", "3"});
  CHECK(j["rows"][0]["certified"] == true);

  const auto m = run({"divisor", "table", "--alpha", "1", "--h", "4", "--order", "8", "--mod", "5",
                      "--format", "csv"});
  REQUIRE(m.code == 0);
  CHECK(m.out.rfind("n,value,certified,window,residue\n", 0) == 0);
  CHECK(m.out.find("\n7,8,false,empirical,3\n") != std::string::npos);
}

TEST_CASE("converge radius and probe") {
  const auto r = run({"converge", "radius", "--tol", "1e-8"});
  REQUIRE(r.code == 0);
  const double rad = std::stod(r.j()["radius"].get<std::string>());
  CHECK(std::abs(rad - 0.206783) < 1e-5);

  const auto p = run({"converge", "probe", "--q", "0.15", "--z", "0.15", "--hmax", "5", "--format", "csv"});
  REQUIRE(p.code == 0);
  CHECK(p.out.rfind("h,gap,value,overflow\n", 0) == 0);
  CHECK(run({"converge", "probe", "--q", "x"}).code == 2);
  const auto m = run({"converge", "pringsheim", "--q", "0.1", "--hmax", "5"});
  REQUIRE(m.code == 0);
  CHECK(m.j()["rows"].size() == 4);
}

TEST_CASE("jfrac invert and expand") {
  const auto r = run({"jfrac", "invert", "--target", "one_over_1mqn", "--depth", "2", "--format", "pretty"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("ab2 = (-2*q)/((1 - q)^2*(1 + q))") != std::string::npos);

  const auto e = run({"jfrac", "expand", "--a", "q^2", "--b", "q^3", "--h", "3", "--zorder", "6"});
  REQUIRE(e.code == 0);
  const json j = e.j();
  CHECK(j["ok"] == true);
  CHECK(j["coefficients"].size() == 6);
  for (int n = 0; n < 6; ++n) CHECK(j["coefficients"][n]["matches"] == true);

  // The printed c_i break the coefficients from n = 5 on; certified n < h = 4 still hold.
  const auto p = run({"jfrac", "expand", "--preset", "qq2_printed", "--h", "4", "--zorder", "8"});
  CHECK(p.code == 0);
  CHECK(p.j()["coefficients"][5]["matches"] == false);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "lemmas", "--h", "3"});
  CHECK(r.code == 0);
  CHECK(r.j()["ok"] == true);
  const auto rnd = run({"verify", "lemmas", "--h", "3", "--spec", "random", "--count", "2"});
  CHECK(rnd.code == 0);
  const auto c = run({"verify", "conjectures", "--h", "3"});
  REQUIRE(c.code == 0);
  const json j = c.j();
  for (const char* key : {"claim", "newton_girard", "first_column", "tilde_D", "special_cases"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("oracle commands") {
  CHECK(run({"oracle", "sigma", "--alpha", "1", "--n", "6"}).j()["value"] == "12");
  CHECK(run({"oracle", "qbinom", "--n", "4", "--k", "2"}).j()["value"] == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(run({"oracle", "binomial-theorem", "--a", "q", "--z", "q", "--order", "12"}).code == 0);
  CHECK(run({"oracle", "binomial-theorem", "--a", "q", "--z", "1"}).code == 2);
  CHECK(run({"oracle", "qbinom", "--n", "2", "--k", "3"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"divisor", "table", "--h", "1"}).code == 2);
  CHECK(run({"divisor", "table", "--bogus"}).code == 2);
  CHECK(run({"jfrac", "expand", "--a", "q", "--b", "1"}).code == 2);
  CHECK(run({"jfrac", "expand", "--a", "q+"}).code == 2);
  CHECK(run({"jfrac", "expand", "--preset", "nope"}).code == 2);
  CHECK(run({"jfrac", "invert", "--target", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output file") {
  const std::string path = "qjfrac_cli_test_output.json";
  const auto r = run({"--output", path, "oracle", "lambert", "--alpha", "0", "--order", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const json j = json::parse(f);
  CHECK(j["coefficients"] == json{"0", "1", "2", "2", "3", "2", "4"});
  std::remove(path.c_str());
}
