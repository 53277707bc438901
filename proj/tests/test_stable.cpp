#include <doctest.h>

#include <random>

#include "qsig/errors.hpp"
#include "qsig/limit.hpp"
#include "support.hpp"

using namespace qsig;
using namespace qsig::testing;

TEST_SUITE("stable limit") {
  TEST_CASE("first polynomials") {
    CHECK(stable_poly(0) == SymbolicPoly({q("1")}));
    CHECK(stable_poly(1) == SymbolicPoly({q("2"), q("-1")}));
    CHECK(stable_poly(2) == SymbolicPoly({q("4"), q("-1/2"), q("-1/2")}));
    CHECK(stable_poly(3).to_string() == "8 - 10/3*a + 1/2*a^2 - 1/6*a^3");
    CHECK(stable_poly(4) == SymbolicPoly({q("14"), q("-47/12"), q("-35/24"), q("5/12"), q("-1/24")}));
    CHECK_THROWS_AS(stable_poly(-1), InvalidInput);
  }

  TEST_CASE("series at a = 6") {
    auto s = stable_series(6, 5);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == Rational(-4));
    CHECK(s[4] == Rational(-26));
    CHECK(stable_poly(4).eval(Rational(6)) == Rational(-26));
  }

  TEST_CASE("rank zero is the signed partition generating function") {
    auto s = stable_series(0, 6);
    // prod (1+t^j)/(1-t^j) = 1 + 2t + 4t^2 + 8t^3 + 14t^4 + 24t^5
    CHECK(s == std::vector<Rational>{1, 2, 4, 8, 14, 24});
    CHECK_THROWS_AS(stable_series(-1, 3), InvalidInput);
  }

  TEST_CASE("property: numeric series equals the symbolic polynomials") {
    auto polys = stable_polys(8);
    for (int a = 0; a <= 12; ++a) {
      auto s = stable_series(a, 9);
      for (int r = 0; r <= 8; ++r) CHECK(s[static_cast<std::size_t>(r)] == polys[static_cast<std::size_t>(r)].eval(Rational(a)));
    }
    for (int r = 0; r <= 8; ++r) CHECK(polys[static_cast<std::size_t>(r)].degree() == r);
  }

  TEST_CASE("property: stable range of the finite sign-representation limit") {
    auto polys = stable_polys(7);
    for (int n = 1; n <= 8; ++n) {
      auto finite = series_expand(limit_sign_rep_closed(n), 8);
      for (int r = 0; r + 1 <= n && r <= 7; ++r)
        CHECK(Rational(finite[static_cast<std::size_t>(r)]) == polys[static_cast<std::size_t>(r)].eval(Rational(n)));
    }
  }

  TEST_CASE("hilbert telescoping") {
    for (int a = 1; a <= 6; ++a) CHECK(hilbert_check(a, 16));
    CHECK(hilbert_check(3, 10));
    CHECK_THROWS_AS(hilbert_check(0, 4), InvalidInput);
  }
}

TEST_SUITE("euler sign") {
  TEST_CASE("examples and errors") {
    CHECK(euler_sign_check(q("1/2"), 5));
    CHECK(euler_sign_check(q("-7/3"), 10));
    CHECK_THROWS_AS(euler_sign_check(q("2"), 10), InvalidInput);
    CHECK_THROWS_AS(euler_sign_check(q("5/2"), 2), InvalidInput);
  }

  TEST_CASE("property: random rationals") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<long> num(-300, 300), den(2, 40);
    int done = 0;
    while (done < 200) {
      Rational z(BigInt(num(rng)), BigInt(den(rng)));
      if (z.is_integer()) continue;
      CHECK(euler_sign_check(z, static_cast<int>(floor_long(abs(z))) + 1 + done % 7));
      ++done;
    }
  }
}

TEST_SUITE("symbolic poly") {
  TEST_CASE("arithmetic") {
    SymbolicPoly a({q("1"), q("1")}), b({q("-1"), q("1")});
    CHECK(a * b == SymbolicPoly({q("-1"), q("0"), q("1")}));
    CHECK((a - a).to_string() == "0");
    CHECK((a + b).eval(q("3/2")) == q("3"));
  }
}
