#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsig/rational.hpp"

namespace qsig {

/// Squarefree monomial a_{i1} a_{i2} ... as a sorted index list, all indices >= 2.
using SignMonomial = std::vector<int>;

struct GradedLess {
  bool operator()(const SignMonomial& a, const SignMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the group ring Z[a_2, a_3, ...] / (a_i^2 = 1).
/// a_0 and a_1 are identified with 1.
class ZExpr {
 public:
  using Terms = std::map<SignMonomial, BigInt, GradedLess>;

  ZExpr() = default;
  static ZExpr constant(const BigInt& c);
  /// Product of a_i over the given indices, with repeats cancelling pairwise.
  /// Indices 0 and 1 are dropped; negative indices are rejected.
  static ZExpr product_of(const std::vector<int>& indices);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient_sum() const;

  /// Adds c times the monomial; the monomial must already be canonical.
  void add_term(const SignMonomial& m, const BigInt& c);

  ZExpr& operator+=(const ZExpr& o);
  friend ZExpr operator+(ZExpr a, const ZExpr& b) { return a += b; }
  friend ZExpr operator-(const ZExpr& a, const ZExpr& b);
  friend ZExpr operator*(const ZExpr& a, const ZExpr& b);
  friend bool operator==(const ZExpr& a, const ZExpr& b) { return a.terms_ == b.terms_; }

  /// "2 + 2*a3 + a2*a4"
  std::string to_string() const;

 private:
  Terms terms_;
};

/// XOR of index sets.
SignMonomial monomial_product(const SignMonomial& a, const SignMonomial& b);

/// Evaluates with a_i replaced by signs[i] (+1 or -1). Indices 0 and 1 need no entry.
/// Throws std::out_of_range if an occurring index is unassigned.
BigInt zexpr_eval(const ZExpr& e, const std::map<int, int>& signs);

}  // namespace qsig
