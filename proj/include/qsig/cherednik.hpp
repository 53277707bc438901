#pragma once

#include <functional>
#include <vector>

#include "qsig/partition.hpp"
#include "qsig/permutation.hpp"
#include "qsig/rat_fun.hpp"
#include "qsig/rational.hpp"
#include "qsig/tableau.hpp"

namespace qsig {

/// Negative generic parameter c for modules of size n; kappa = -1/c.
class RcaParam {
 public:
  const Rational& c() const { return c_; }
  const Rational& kappa() const { return kappa_; }
  int n() const { return n_; }

 private:
  friend RcaParam validate_param(const Rational& c, int n);
  RcaParam(Rational c, int n);
  Rational c_;
  Rational kappa_;
  int n_;
};

/// Accepts c < 0 with c*m not an integer for 1 <= m <= n.
/// c = 0 and c > 0 throw InvalidInput (the latter points to the conjugate shape);
/// excluded points throw DegenerateParameter.
RcaParam validate_param(const Rational& c, int n);

struct RcaBasisElement {
  std::vector<int> mu;        // nondecreasing, nonnegative
  Permutation sigma;          // sigma(i) < sigma(j) whenever i < j and mu_i = mu_j
  std::size_t tableau = 0;    // index into enumerate_syt(shape)

  int weight() const;
};

/// Visits basis elements with |mu| <= max_wt, ordered by weight, then mu
/// lexicographically, then tableau, then sigma lexicographically.
void for_each_basis_element(const Partition& shape, int max_wt,
                            const std::function<void(const RcaBasisElement&)>& visit);
std::vector<RcaBasisElement> basis_enumerate(const Partition& shape, const RcaParam& p, int max_wt);

/// Parity accumulator f(v); see basis_sign.
long sign_statistic(const RcaBasisElement& v, const Partition& shape, const RcaParam& p);

/// (-1)^f(v). Throws InvalidInput if v is not a valid basis element for the shape.
int basis_sign(const RcaBasisElement& v, const Partition& shape, const RcaParam& p);

/// Coefficients k = 0..n_terms-1 of the signature character, by direct enumeration.
std::vector<BigInt> character_series(const Partition& shape, const RcaParam& p, int n_terms);

/// 2 + the largest floor threshold over all tableaux.
long n_max(const Partition& shape, const RcaParam& p);

struct ClosedFormOptions {
  unsigned jobs = 1;
};

/// Exact signature character as a reduced rational function with denominator (1-t)^n.
/// Throws ConsistencyError if the numerator fails to divide out exactly.
RatFun character_closed(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts = {});

/// Numerator p(t) with character = p(t)/(1-t)^n, before reduction.
IntPoly character_numerator(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts = {});

/// Exact rational norm of a basis vector from the product formula.
/// Throws DegenerateParameter if any factor vanishes.
Rational basis_norm(const RcaBasisElement& v, const Partition& shape, const RcaParam& p);

/// True iff sign(basis_norm(v)) == basis_sign(v) for all |mu| <= max_wt.
bool norm_oracle(const Partition& shape, const RcaParam& p, int max_wt);

/// p(1) by the tableau product of saturated floor signs.
BigInt asymptotic_signature_direct(const Partition& shape, const RcaParam& p);

/// p(1) of the closed form, cross-checked against the direct product.
/// Throws ConsistencyError on mismatch.
BigInt asymptotic_signature(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts = {});

struct BridgeReport {
  BigInt asymptotic;
  BigInt hecke_raw;
  BigInt hecke_normalized;
  bool signed_match_raw = false;
  bool abs_match_raw = false;
  bool signed_match_normalized = false;
  bool abs_match_normalized = false;
};

BridgeReport bridge_check(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts = {});

}  // namespace qsig
