#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qsig/rational.hpp"

namespace qsig {

/// Dense univariate polynomial in t over Z. Index is the power of t; no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t power);
  /// (1 - t^k)^e
  static IntPoly one_minus_t_power(std::size_t k, std::size_t e = 1);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  BigInt eval(const BigInt& t) const;
  Rational eval(const Rational& t) const;
  /// p(-t)
  IntPoly reflect() const;

  /// gcd of coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& k);
  IntPoly& divide_exact(const BigInt& k);
  IntPoly shifted(std::size_t k) const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Quotient and remainder over Z; requires the divisor's leading coefficient to divide
/// every intermediate leading term, otherwise returns false.
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient, IntPoly& remainder);

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

IntPoly primitive_part(const IntPoly& p);

/// Primitive gcd over Q[t], normalized to positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Truncated power p^e mod t^order.
IntPoly pow_truncated(const IntPoly& p, std::size_t e, std::size_t order);
IntPoly truncate(const IntPoly& p, std::size_t order);

}  // namespace qsig
