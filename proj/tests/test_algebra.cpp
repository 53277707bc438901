#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qsig/errors.hpp"
#include "qsig/int_poly.hpp"
#include "qsig/rat_fun.hpp"
#include "qsig/rational.hpp"
#include "qsig/zexpr.hpp"
#include "support.hpp"

using namespace qsig;
using qsig::testing::q;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPoly(std::move(c));
}

// schoolbook convolution, independent of IntPoly::operator*
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t order) {
  std::vector<BigInt> r(order, 0);
  for (std::size_t i = 0; i < a.size() && i < order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and canonical form") {
    CHECK(q("6/8").to_string() == "3/4");
    CHECK(q(" -7/8 ").to_string() == "-7/8");
    CHECK(q("4/2").to_string() == "2");
    CHECK_THROWS_AS(q("4/-2"), InvalidInput);
    CHECK(q("5").is_integer());
    CHECK_THROWS_AS(q("1/0"), InvalidInput);
    CHECK_THROWS_AS(q("abc"), InvalidInput);
    CHECK_THROWS_AS(q(""), InvalidInput);
  }

  TEST_CASE("floor") {
    CHECK(rat_floor(q("-7/8")) == -1);
    CHECK(rat_floor(q("7/8")) == 0);
    CHECK(rat_floor(q("-2")) == -2);
    CHECK(floor_long(q("-21/4")) == -6);
  }

  TEST_CASE("ordering and arithmetic") {
    CHECK(q("-1/2") < q("-1/3"));
    CHECK(q("1/2") + q("1/3") == q("5/6"));
    CHECK(q("1/2") / q("-1/4") == Rational(-2));
    CHECK_THROWS(q("1") / Rational(0));
  }
}

TEST_SUITE("int_poly") {
  TEST_CASE("basic arithmetic and printing") {
    IntPoly p{3, -2, -2, -2};
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "3 - 2*t - 2*t^2 - 2*t^3");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{0, 0}.is_zero());
    CHECK(IntPoly::one_minus_t_power(2, 2) == (IntPoly{1, 0, -2, 0, 1}));
    CHECK(p.reflect() == (IntPoly{3, 2, -2, 2}));
    CHECK(p.eval(BigInt(1)) == -3);
    CHECK((IntPoly{2, 4, 6}).content() == 2);
  }

  TEST_CASE("gcd of products") {
    IntPoly a{1, 1}, b{1, 0, 1}, c{2, -1};
    IntPoly g = gcd(a * b * b, a * c * b);
    CHECK(g == a * b);
  }

  TEST_CASE("property: exact division undoes multiplication") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      IntPoly a = random_poly(rng, 6, 9);
      IntPoly b = random_poly(rng, 4, 9);
      if (b.is_zero() || (b.leading() != 1 && b.leading() != -1)) continue;
      IntPoly quotient, remainder;
      REQUIRE(divide_exact(a * b, b, quotient, remainder));
      CHECK(quotient == a);
      CHECK(remainder.is_zero());
    }
  }

  TEST_CASE("property: gcd divides both arguments") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 100; ++k) {
      IntPoly a = random_poly(rng, 5, 5), b = random_poly(rng, 5, 5), f = random_poly(rng, 2, 3);
      if (a.is_zero() || b.is_zero() || f.is_zero()) continue;
      IntPoly g = gcd(a * f, b * f);
      CHECK(pseudo_remainder(a * f, g).is_zero());
      CHECK(pseudo_remainder(b * f, g).is_zero());
      CHECK(pseudo_remainder(g, primitive_part(f)).is_zero());
    }
  }

  TEST_CASE("truncated power matches repeated convolution") {
    IntPoly b{1, 1, 1};
    auto expected = std::vector<BigInt>{1};
    for (int e = 0; e < 5; ++e) expected = convolve(expected, b.coeffs(), 8);
    CHECK(pow_truncated(b, 5, 8) == IntPoly(expected));
  }
}

TEST_SUITE("rat_fun") {
  TEST_CASE("canonical form") {
    RatFun r = RatFun::normalize(IntPoly{-2, 2}, IntPoly{-1, 0, 1});
    CHECK(r.numerator() == IntPoly{2});
    CHECK(r.denominator() == (IntPoly{1, 1}));
    CHECK(RatFun::normalize(IntPoly{3}, IntPoly{6}) == RatFun::normalize(IntPoly{1}, IntPoly{2}));
    CHECK_THROWS(RatFun::normalize(IntPoly{1}, IntPoly{}));
  }

  TEST_CASE("one minus t exponent and printing") {
    RatFun r = qsig::testing::over_one_minus_t({3, -2, -2, -2}, 4);
    REQUIRE(r.one_minus_t_exponent().has_value());
    CHECK(*r.one_minus_t_exponent() == 4);
    CHECK(r.to_string() == "(3 - 2*t - 2*t^2 - 2*t^3)/(1-t)^4");
    CHECK_FALSE(RatFun::normalize(IntPoly{1}, IntPoly{1, 1}).one_minus_t_exponent());
  }

  TEST_CASE("series expansion") {
    auto s = series_expand(qsig::testing::over_one_minus_t({1}, 2), 5);
    CHECK(s == std::vector<BigInt>{1, 2, 3, 4, 5});
    auto alt = series_expand(RatFun::normalize(IntPoly{1}, IntPoly{1, 1}), 4);
    CHECK(alt == std::vector<BigInt>{1, -1, 1, -1});
    CHECK_THROWS(series_expand(RatFun::normalize(IntPoly{1}, IntPoly{0, 1}), 3));
    CHECK_THROWS(series_expand(RatFun::normalize(IntPoly{1}, IntPoly{2, 1}), 3));
    auto half = series_expand_rational(RatFun::normalize(IntPoly{1}, IntPoly{2, 1}), 3);
    CHECK(half == std::vector<Rational>{q("1/2"), q("-1/4"), q("1/8")});
  }

  TEST_CASE("property: series times denominator recovers numerator") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
      IntPoly num = random_poly(rng, 5, 7);
      IntPoly den = random_poly(rng, 4, 4);
      if (den.is_zero()) continue;
      std::vector<BigInt> dc = den.coeffs();
      dc[0] = (k % 2) ? 1 : -1;
      den = IntPoly(dc);
      RatFun r = RatFun::normalize(num, den);
      if (r.denominator().coeff(0) != 1 && r.denominator().coeff(0) != -1) continue;
      const std::size_t order = 12;
      auto s = series_expand(r, order);
      CHECK(IntPoly(convolve(s, r.denominator().coeffs(), order)) == truncate(r.numerator(), order));
    }
  }

  TEST_CASE("property: field identities") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 60; ++k) {
      IntPoly a = random_poly(rng, 4, 6), b = random_poly(rng, 4, 6), c = random_poly(rng, 3, 6);
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      RatFun x = RatFun::normalize(a, b), y = RatFun::normalize(c, b * a + c);
      if ((b * a + c).is_zero()) continue;
      CHECK(x * (RatFun(IntPoly{1}) / x) == RatFun(IntPoly{1}));
      CHECK((x + y) - y == x);
      CHECK(x * (y + RatFun(IntPoly{1})) == x * y + x);
      CHECK(x.reflect().reflect() == x);
    }
  }
}

TEST_SUITE("zexpr") {
  TEST_CASE("relations a_i^2 = 1 and a_0 = a_1 = 1") {
    CHECK(ZExpr::product_of({3, 3}) == ZExpr::constant(1));
    CHECK(ZExpr::product_of({0, 1, 4}) == ZExpr::product_of({4}));
    CHECK(ZExpr::product_of({4, 2, 4, 3}).to_string() == "a2*a3");
    CHECK_THROWS_AS(ZExpr::product_of({-1}), InvalidInput);
  }

  TEST_CASE("printing is graded lexicographic") {
    ZExpr e = ZExpr::product_of({2, 4}) + ZExpr::product_of({3}) + ZExpr::constant(2) + ZExpr::product_of({3});
    CHECK(e.to_string() == "2 + 2*a3 + a2*a4");
    CHECK(ZExpr().to_string() == "0");
    CHECK((ZExpr::product_of({3}) - ZExpr::product_of({3})).is_zero());
  }

  TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> idx(0, 6), len(0, 4), coeff(-3, 3), bit(0, 1);
    auto random_z = [&] {
      ZExpr e;
      for (int k = 0; k < 4; ++k) {
        std::vector<int> m;
        for (int j = len(rng); j > 0; --j) m.push_back(idx(rng));
        e += ZExpr::product_of(m) * ZExpr::constant(coeff(rng));
      }
      return e;
    };
    for (int k = 0; k < 200; ++k) {
      ZExpr x = random_z(), y = random_z();
      std::map<int, int> signs;
      for (int i = 2; i <= 6; ++i) signs[i] = bit(rng) ? 1 : -1;
      CHECK(zexpr_eval(x * y, signs) == zexpr_eval(x, signs) * zexpr_eval(y, signs));
      CHECK(zexpr_eval(x + y, signs) == zexpr_eval(x, signs) + zexpr_eval(y, signs));
    }
  }

  TEST_CASE("evaluation needs every index") {
    CHECK_THROWS_AS(zexpr_eval(ZExpr::product_of({5}), {{2, 1}}), std::out_of_range);
  }
}
