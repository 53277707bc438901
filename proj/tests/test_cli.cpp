#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "qsig/cli.hpp"
#include "qsig/errors.hpp"
#include "qsig/format.hpp"
#include "support.hpp"

using namespace qsig;
using namespace qsig::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("rational function with (1-t)^k denominator") {
    RatFun r = over_one_minus_t({3, -2, -2, -2}, 4);
    CHECK(to_json(r).dump() == R"({"numerator":[3,-2,-2,-2],"denominator":"(1-t)^4"})");
    CHECK(ratfun_from_json(to_json(r)) == r);
    RatFun other = RatFun::normalize(IntPoly{1}, IntPoly{1, 0, 1});
    CHECK(ratfun_from_json(to_json(other)) == other);
    CHECK_THROWS_AS(ratfun_from_json(Json::parse(R"({"numerator":[1],"denominator":"(1+t)^2"})")), InvalidInput);
    CHECK_THROWS_AS(ratfun_from_json(Json::parse(R"({"numerator":[1]})")), InvalidInput);
  }

  TEST_CASE("big integers become strings") {
    BigInt big("123456789012345678901234567890");
    CHECK(to_json(big).is_string());
    CHECK(bigint_from_json(to_json(big)) == big);
    CHECK(to_json(BigInt(-5)).dump() == "-5");
  }

  TEST_CASE("round trips") {
    ZExpr z = ZExpr::product_of({2, 4}) + ZExpr::constant(2) + ZExpr::product_of({3}) + ZExpr::product_of({3});
    CHECK(zexpr_from_json(to_json(z)) == z);
    CHECK(to_json(z).dump() == R"([{"indices":[],"coeff":2},{"indices":[3],"coeff":2},{"indices":[2,4],"coeff":1}])");
    Partition p = Partition::parse("3,1,1");
    CHECK(partition_from_json(to_json(p)) == p);
    SymbolicPoly s({q("14"), q("-47/12")});
    CHECK(symbolic_from_json(to_json(s)) == s);
    CHECK(rational_from_json(to_json(q("-7/8"))) == q("-7/8"));
    CHECK(intpoly_from_json(to_json(IntPoly{1, 0, -3})) == (IntPoly{1, 0, -3}));
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), InvalidInput);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("rca closed") {
    Run r = run({"rca", "closed", "--shape", "3,1", "--c", "-7/8"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"numerator\":[3,-2,-2,-2],\"denominator\":\"(1-t)^4\"}\n");
    Run t = run({"rca", "closed", "--shape", "3,1", "--c=-7/8", "--format", "text", "--jobs", "2"});
    CHECK(t.out == "(3 - 2*t - 2*t^2 - 2*t^3)/(1-t)^4\n");
  }

  TEST_CASE("hecke sig") {
    Run r = run({"hecke", "sig", "--shape", "2,2,1", "--variant", "normalized", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 + 2*a3 + a2*a4\n");
    Run at = run({"hecke", "sig", "--shape", "3,1", "--at", "-7/8", "--variant", "raw"});
    CHECK(Json::parse(at.out)["signature"] == -3);
    Run raw = run({"hecke", "sig", "--shape", "2,1", "--variant", "raw", "--format", "text"});
    CHECK(raw.out == "a2 + a2*a3\n");
  }

  TEST_CASE("hecke oracle") {
    Run r = run({"hecke", "oracle", "--shape", "3,1", "--at", "-7/8", "--prec", "96"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["signature"] == -3);
    CHECK(j["relations_ok"] == true);
  }

  TEST_CASE("rca series, asym, limit") {
    Run s = run({"rca", "series", "--shape", "1,1", "--c", "-3/4", "--degree", "3", "--format", "text"});
    CHECK(s.out == "1, 0, -1, -2\n");
    Run a = run({"rca", "asym", "--shape", "2,1,1", "--c", "-7/8", "--bridge"});
    Json j = Json::parse(a.out);
    CHECK(j["asymptotic_signature"] == -3);
    CHECK(j["hecke_raw"] == 3);
    CHECK(j["abs_match_raw"] == true);
    CHECK(j["signed_match_raw"] == false);
    Run l = run({"rca", "limit", "--shape", "1,1"});
    CHECK(ratfun_from_json(Json::parse(l.out)) == RatFun::normalize(IntPoly{1}, IntPoly{1, 0, 1}));
  }

  TEST_CASE("stable commands") {
    Run s = run({"stable", "series", "--a", "6", "--degree", "4", "--format", "text"});
    CHECK(s.out == "1, -4, -17, -30, -26\n");
    Run p = run({"stable", "poly", "--order", "3", "--format", "text"});
    CHECK(p.out == "8 - 10/3*a + 1/2*a^2 - 1/6*a^3\n");
  }

  TEST_CASE("errors map to exit codes") {
    Run deg = run({"rca", "closed", "--shape", "1,1,1", "--c", "-1/2"});
    CHECK(deg.code == 2);
    CHECK(deg.err == "degenerate parameter c = -1/2 (excluded point r/m, m=2)\n");
    CHECK(deg.out.empty());
    CHECK(run({"rca", "closed", "--shape", "1,2", "--c", "-1/3"}).code == 2);
    CHECK(run({"rca", "closed", "--shape", "2,1", "--c", "1/5"}).code == 2);
    CHECK(run({"rca", "closed", "--shape", "2,1", "--c", "x"}).code == 2);
    CHECK(run({"rca", "closed", "--shape", "2,1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"hecke", "sig", "--shape", "2,1", "--format", "xml"}).code == 2);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("rca") != std::string::npos);
  }

  TEST_CASE("every error is a single line") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"rca", "closed", "--shape", "2,1", "--c", "1/5"}, {"bogus"}, {"rca", "series", "--shape", "2,1", "--c", "-1/3", "--degree", "2"}}) {
      Run r = run(args);
      CHECK(r.code == 2);
      CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
  }
}
