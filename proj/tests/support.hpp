#pragma once

#include <random>
#include <string>
#include <vector>

#include "qsig/parameter.hpp"
#include "qsig/partition.hpp"
#include "qsig/rat_fun.hpp"
#include "qsig/rational.hpp"

namespace qsig::testing {

inline Rational q(const std::string& s) { return Rational::parse(s); }

inline std::vector<Partition> partitions_up_to(int max_n) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

// Uniform-ish rational in (lo, hi) with denominator <= max_den, generic for size n.
inline Rational random_generic(std::mt19937_64& rng, long lo, long hi, int n, long max_den = 36) {
  std::uniform_int_distribution<long> den_dist(2, max_den);
  for (;;) {
    long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(lo * den + 1, hi * den - 1);
    Rational c(BigInt(num_dist(rng)), BigInt(den));
    if (c.is_zero() || excluded_denominator(c, n)) continue;
    return c;
  }
}

inline RatFun over_one_minus_t(std::initializer_list<long> num, std::size_t k) {
  return RatFun::normalize(IntPoly(num), IntPoly::one_minus_t_power(1, k));
}

// (1 - (-t^k)^m) / (1 + t^k)
inline RatFun alternating_partial(std::size_t k, std::size_t m) {
  IntPoly top = IntPoly::constant(1) - IntPoly::monomial(m % 2 == 0 ? 1 : -1, k * m);
  return RatFun::normalize(top, IntPoly::constant(1) + IntPoly::monomial(1, k));
}

inline RatFun poly(std::initializer_list<long> c) { return RatFun(IntPoly(c)); }

inline RatFun t_pow(std::size_t k) { return RatFun(IntPoly::monomial(1, k)); }

inline RatFun one_plus_t_pow(std::size_t k) { return RatFun(IntPoly::constant(1) + IntPoly::monomial(1, k)); }

inline RatFun one_minus_t_pow(std::size_t k) { return RatFun(IntPoly::one_minus_t_power(k)); }

}  // namespace qsig::testing
