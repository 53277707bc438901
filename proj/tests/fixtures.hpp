#pragma once

#include <string>
#include <vector>

#include "qsig/zexpr.hpp"
#include "support.hpp"

namespace qsig::testing {

struct CharacterFixture {
  std::string shape;
  std::string interval;
  std::vector<std::string> samples;  // interior points, all valid
  RatFun expected;
};

inline std::vector<CharacterFixture> character_fixtures() {
  std::vector<CharacterFixture> f;
  const RatFun one_minus_t_2 = RatFun(IntPoly::one_minus_t_power(1, 2));
  const RatFun one_minus_t_3 = RatFun(IntPoly::one_minus_t_power(1, 3));

  for (const char* c : {"-7/8", "-13/5", "-31/7"}) {
    f.push_back({"2", "c<0", {c}, over_one_minus_t({1}, 2)});
    f.push_back({"3", "c<0", {c}, over_one_minus_t({1}, 3)});
    f.push_back({"4", "c<0", {c}, over_one_minus_t({1}, 4)});
  }

  // (1,1): I_m = [-1/2-m, 1/2-m]
  for (long m = 0; m <= 3; ++m) {
    std::vector<std::string> samples;
    if (m == 0) samples = {"-1/4", "-1/10"};
    else samples = {(Rational(-m) + q("1/4")).to_string(), (Rational(-m) - q("1/3")).to_string()};
    RatFun num = poly({1}) - poly({0, 2}) * alternating_partial(2, static_cast<std::size_t>(m));
    f.push_back({"1,1", "I_" + std::to_string(m), samples, num / one_minus_t_2});
  }

  // (2,1): (-2/3-m, -1/3-m) and (-4/3-m, -2/3-m)
  for (long m = 0; m <= 2; ++m) {
    auto alt = alternating_partial(3, static_cast<std::size_t>(m));
    RatFun a = poly({2, -2}) + poly({0, 0, 2}) * poly({-1, 0, 1}) * alt;
    f.push_back({"2,1", "(-2/3-" + std::to_string(m) + ", -1/3-" + std::to_string(m) + ")",
                 {(Rational(-m) - q("11/20")).to_string(), (Rational(-m) - q("5/12")).to_string()}, a / one_minus_t_3});
    RatFun b = poly({2, -2, -2}) + poly({0, 0, 0, 0, 2}) * poly({1, 1}) * alt;
    f.push_back({"2,1", "(-4/3-" + std::to_string(m) + ", -2/3-" + std::to_string(m) + ")",
                 {(Rational(-m) - q("21/20")).to_string(), (Rational(-m) - q("3/4")).to_string()}, b / one_minus_t_3});
  }

  f.push_back({"1,1,1", "(-1/3, 0)", {"-1/4", "-1/7"}, over_one_minus_t({1}, 3)});
  f.push_back({"1,1,1", "(-1/2, -1/3)", {"-5/12", "-3/7"}, over_one_minus_t({1, -4, 2}, 3)});
  f.push_back({"1,1,1", "(-2/3, -1/2)", {"-7/12", "-4/7"}, over_one_minus_t({1, -4, 2, 2}, 3)});
  f.push_back({"1,1,1", "(-1, -2/3)", {"-5/6", "-3/4"}, over_one_minus_t({1, -4, 6, -2, -2}, 3)});

  f.push_back({"3,1", "(-1/4, 0)", {"-1/5", "-1/7"}, over_one_minus_t({3}, 4)});
  f.push_back({"3,1", "(-1/2, -1/4)", {"-3/8", "-2/7"}, over_one_minus_t({3, -2}, 4)});
  f.push_back({"3,1", "(-3/4, -1/2)", {"-5/8", "-5/7"}, over_one_minus_t({3, -2, -2}, 4)});
  f.push_back({"3,1", "(-1, -3/4)", {"-7/8", "-4/5"}, over_one_minus_t({3, -2, -2, -2}, 4)});

  f.push_back({"2,2", "(-1/3, 0)", {"-1/5", "-2/7"}, over_one_minus_t({2}, 4)});
  f.push_back({"2,2", "(-1/2, -1/3)", {"-5/12", "-2/5"}, over_one_minus_t({2, 0, -2}, 4)});
  f.push_back({"2,2", "(-2/3, -1/2)", {"-7/12", "-3/5"}, over_one_minus_t({2, -6, 2, 2}, 4)});
  f.push_back({"2,2", "(-1, -2/3)", {"-5/6", "-5/7"}, over_one_minus_t({2, -6, 2, 2, 2}, 4)});

  f.push_back({"2,1,1", "(-1/4, 0)", {"-1/5", "-1/7"}, over_one_minus_t({3}, 4)});
  f.push_back({"2,1,1", "(-1/2, -1/4)", {"-3/8", "-2/7"}, over_one_minus_t({3, -6, 2}, 4)});
  f.push_back({"2,1,1", "(-3/4, -1/2)", {"-5/8", "-5/7"}, over_one_minus_t({3, -10, 8}, 4)});
  f.push_back({"2,1,1", "(-1, -3/4)", {"-7/8", "-4/5"}, over_one_minus_t({3, -10, 8, 6, -4, -4, -2}, 4)});

  f.push_back({"1,1,1,1", "(-1/4, 0)", {"-1/5", "-1/7"}, over_one_minus_t({1}, 4)});
  f.push_back({"1,1,1,1", "(-1/3, -1/4)", {"-2/7", "-3/10"}, over_one_minus_t({1, -6, 6, -2}, 4)});
  f.push_back({"1,1,1,1", "(-1/2, -1/3)", {"-5/12", "-2/5"}, over_one_minus_t({1, -6, 10, -2, -2}, 4)});
  f.push_back({"1,1,1,1", "(-2/3, -1/2)", {"-7/12", "-3/5"}, over_one_minus_t({1, -6, 16, -18, 2, 4, 2}, 4)});
  f.push_back({"1,1,1,1", "(-3/4, -2/3)", {"-17/24", "-7/10"},
               over_one_minus_t({1, -6, 16, -18, -2, 16, -2, -4, -2}, 4)});
  f.push_back({"1,1,1,1", "(-1, -3/4)", {"-7/8", "-4/5"}, over_one_minus_t({1, -6, 16, -24, 18, 0, -8, 0, 2, 2}, 4)});
  return f;
}

struct HeckeFixture {
  std::string shape;
  std::vector<std::vector<int>> monomials;  // repeated entries add up
  std::string text;
};

inline std::vector<HeckeFixture> hecke_fixtures() {
  return {
      {"2,1", {{}, {3}}, "1 + a3"},
      {"3,1", {{}, {2, 4}, {2, 3, 4}}, "1 + a2*a4 + a2*a3*a4"},
      {"2,1,1", {{}, {3}, {2, 3, 4}}, "1 + a3 + a2*a3*a4"},
      {"2,2", {{}, {3}}, "1 + a3"},
      {"4,1", {{}, {3, 5}, {2, 4, 5}, {2, 3, 4, 5}}, "1 + a3*a5 + a2*a4*a5 + a2*a3*a4*a5"},
      {"3,1,1", {{}, {5}, {2, 4}, {2, 4, 5}, {2, 3, 4}, {2, 3, 4, 5}}, "1 + a5 + a2*a4 + a2*a3*a4 + a2*a4*a5 + a2*a3*a4*a5"},
      {"2,1,1,1", {{}, {3}, {2, 3, 4}, {2, 4, 5}}, "1 + a3 + a2*a3*a4 + a2*a4*a5"},
      {"3,2", {{}, {2, 4}, {2, 4}, {2, 3, 4}, {2, 3, 4}}, "1 + 2*a2*a4 + 2*a2*a3*a4"},
      {"2,2,1", {{}, {}, {3}, {3}, {2, 4}}, "2 + 2*a3 + a2*a4"},
  };
}

inline ZExpr build_zexpr(const std::vector<std::vector<int>>& monomials) {
  ZExpr e;
  for (const auto& m : monomials) e += ZExpr::product_of(m);
  return e;
}

}  // namespace qsig::testing
