#pragma once

#include <string>
#include <vector>

#include "qsig/partition.hpp"
#include "qsig/rat_fun.hpp"
#include "qsig/rational.hpp"
#include "qsig/tableau.hpp"

namespace qsig {

/// k_j(T) = #{i > j : d_i < 0} + #{(s,t) : 1 <= s <= j < t, d_t - d_s in {0,-1}}, j = 0..n-1.
int kj_stat(const StandardTableau& t, int j);
/// Same statistic from the content vector alone.
int kj_stat(const std::vector<int>& content, int j);

/// Limit of the signature character as c -> -infinity, by the descent-set formula.
RatFun limit_character(const Partition& shape);

/// Composition-sum closed form for the column shape (1^n).
RatFun limit_sign_rep_closed(int n);

/// The same quantity through sums of P_n(1, t^a_1, ..., t^a_s) over 0 < a_1 < ... < a_s,
/// with P_n expanded by inclusion-exclusion and each sum resummed geometrically.
/// For depth > 0 the bracket is also summed directly over a_s <= depth and compared
/// with the resummed series through degree depth; a mismatch throws ConsistencyError.
RatFun strict_sequence_form(int n, int depth = 0);

/// Polynomial in the formal rank a with rational coefficients, index = power of a.
class SymbolicPoly {
 public:
  SymbolicPoly() = default;
  explicit SymbolicPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational eval(const Rational& a) const;

  SymbolicPoly& operator+=(const SymbolicPoly& o);
  friend SymbolicPoly operator+(SymbolicPoly x, const SymbolicPoly& y) { return x += y; }
  friend SymbolicPoly operator-(const SymbolicPoly& x, const SymbolicPoly& y);
  friend SymbolicPoly operator*(const SymbolicPoly& x, const SymbolicPoly& y);
  friend SymbolicPoly operator*(SymbolicPoly x, const Rational& k);
  friend bool operator==(const SymbolicPoly& x, const SymbolicPoly& y) { return x.c_ == y.c_; }

  /// "8 - 10/3*a + 1/2*a^2 - 1/6*a^3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Leading coefficients of the stable limit f(a, t) at integer rank a >= 0.
std::vector<Rational> stable_series(int a, int n_terms);

/// Coefficient P_r of t^r in f(a, t) as a polynomial in a.
SymbolicPoly stable_poly(int r);
/// P_0 .. P_max_r in one pass.
std::vector<SymbolicPoly> stable_polys(int max_r);

/// The unsigned analogue 1 + sum_i ([i+1]^a - [i]^a) equals 1/(1-t)^a through n_terms.
bool hilbert_check(int a, int n_terms);

/// Sign of prod_{j <= n_factors} (1 - z^2/j^2) equals (-1)^floor|z|.
/// Throws InvalidInput for integer z or n_factors <= |z|.
bool euler_sign_check(const Rational& z, int n_factors);

}  // namespace qsig
