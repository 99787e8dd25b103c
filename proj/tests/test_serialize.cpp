#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daehee/serialize.hpp"

using namespace daehee;

namespace {
const MultiPoly L = MultiPoly::variable(Var::lambda);
const MultiPoly X = MultiPoly::variable(Var::x);
MultiPoly c(long long n, long long d = 1) { return MultiPoly::constant(Rational(n, d)); }
}  // namespace

TEST_CASE("poly_json emits quadruples in lexicographic exponent order") {
  // (0,0,0) < (0,1,0) < (1,0,0)
  const MultiPoly p = L + X + c(-1, 2);
  CHECK(poly_json(p).dump() == R"([["-1/2",0,0,0],["1",0,1,0],["1",1,0,0]])");
  CHECK(poly_json(MultiPoly()).dump() == "[]");
}

TEST_CASE("value_json uses plain strings for constants") {
  CHECK(value_json(c(-3, 4)).dump() == "\"-3/4\"");
  CHECK(value_json(c(0)).dump() == "\"0\"");
  CHECK(value_json(X).dump() == R"([["1",0,1,0]])");
}

TEST_CASE("series_json carries order and plain coefficients") {
  const TruncatedSeries l = log1p(TruncatedSeries::identity(2));
  CHECK(series_json(l).dump() ==
        R"({"order":2,"coeffs":[[],[["1",0,0,0]],[["-1/2",0,0,0]]]})");
}

TEST_CASE("series_json refuses partially computable series") {
  const TruncatedSeries t = TruncatedSeries::identity(4);
  const TruncatedSeries q = div_exact(t, t);  // known = 3 < order = 4
  CHECK_THROWS_AS(series_json(q), std::invalid_argument);
}

TEST_CASE("report serialization carries schema fields") {
  VerificationReport rep = check_eq10(2);
  const Json arr = reports_json({rep});
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["identity"] == "eq10");
  CHECK(arr[0]["status"] == "pass");
  CHECK(arr[0]["params"]["n_max"] == 2);
  CHECK(arr[0].contains("elapsed_ms"));
  CHECK_FALSE(arr[0].contains("witness"));

  VerificationReport bad = check_eq10(2, true);
  const Json arr2 = reports_json({bad});
  CHECK(arr2[0]["status"] == "fail");
  REQUIRE(arr2[0].contains("witness"));
  CHECK(arr2[0]["witness"]["n"] == 1);
  CHECK(arr2[0]["witness"].contains("lhs"));
  CHECK(arr2[0]["witness"].contains("rhs"));
}

TEST_CASE("markdown report table") {
  VerificationReport rep = check_thm(IdentityId::thm7, 2, 1, 1);
  const std::string md = reports_markdown({rep});
  CHECK(md.find("| identity | params | status | note |") == 0);
  CHECK(md.find("| thm7 | n_max=2, r_max=1 | pass | corrected reading |") != std::string::npos);
  CHECK(md.find("elapsed") == std::string::npos);

  const std::string md_timed = reports_markdown({rep}, true);
  CHECK(md_timed.find("elapsed_ms") != std::string::npos);

  VerificationReport bad = check_eq10(2, true);
  const std::string md_bad = reports_markdown({bad});
  CHECK(md_bad.find("FAILED eq10 at n=1") != std::string::npos);
  CHECK(md_bad.find("lhs = ") != std::string::npos);
}

TEST_CASE("params_str formats every knob") {
  ParamSet p{12, 4, 3, std::vector<long long>{-1, 0, 1, 2, 3}};
  CHECK(params_str(p) == "n_max=12, r_max=4, d_max=3, k_set=-1,0,1,2,3");
  CHECK(params_json(p).dump() == R"({"n_max":12,"r_max":4,"d_max":3,"k_set":[-1,0,1,2,3]})");
}
