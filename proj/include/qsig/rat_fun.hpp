#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsig/int_poly.hpp"

namespace qsig {

/// Reduced quotient of integer polynomials in t.
///
/// Canonical form: numerator and denominator coprime over Q[t], integral with
/// jointly coprime contents, denominator leading coefficient positive. Two
/// RatFuns are equal as functions iff their canonical forms are identical.
class RatFun {
 public:
  RatFun() : num_(), den_(IntPoly::constant(1)) {}
  RatFun(const IntPoly& p) : num_(p), den_(IntPoly::constant(1)) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error for a zero denominator.
  static RatFun normalize(const IntPoly& num, const IntPoly& den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// If the denominator is +-(1-t)^k with k >= 1, returns k.
  std::optional<std::size_t> one_minus_t_exponent() const;

  /// f(-t)
  RatFun reflect() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  /// "(num)/(den)", or just the numerator when the denominator is 1.
  std::string to_string() const;

 private:
  IntPoly num_;
  IntPoly den_;
};

/// Leading Taylor coefficients at t = 0. Requires a nonzero constant term in the
/// denominator and integral coefficients; throws std::domain_error otherwise.
std::vector<BigInt> series_expand(const RatFun& r, std::size_t n_terms);

/// Same, allowing rational coefficients.
std::vector<Rational> series_expand_rational(const RatFun& r, std::size_t n_terms);

}  // namespace qsig
