#pragma once

#include "qsig/partition.hpp"
#include "qsig/rational.hpp"
#include "qsig/tableau.hpp"
#include "qsig/zexpr.hpp"

namespace qsig {

/// Hecke parameter Q = exp(2 pi i c), bracket base q = exp(pi i c).
/// Valid for a given n when c*m is not an integer for 1 <= m <= n.
class HeckeParam {
 public:
  /// Throws DegenerateParameter or InvalidInput (n < 1).
  HeckeParam(Rational c, int n);
  const Rational& c() const { return c_; }
  int n() const { return n_; }

 private:
  Rational c_;
  int n_;
};

enum class SignatureVariant { raw, normalized };

/// Sign of [[m]] at q = exp(pi i c): (-1)^(floor(cm) + floor(c)).
/// Throws DegenerateParameter if c or cm is an integer.
int sign_bracket(long m, const Rational& c);
int sign_bracket(long m, const HeckeParam& p);

/// Product over negative pairs of a_{|delta|+1} a_{|delta|-1}.
ZExpr tableau_monomial(const StandardTableau& t);

ZExpr signature_z_raw(const Partition& shape);
/// Raw signature times the row-reading tableau's monomial.
ZExpr signature_z_normalized(const Partition& shape);

BigInt signature_at(const Partition& shape, const HeckeParam& p, SignatureVariant variant);

/// Sum over 2 <= j_1 < ... < j_l <= n of prod a_{j-1} a_j. Throws InvalidInput unless 0 <= l <= n-1.
ZExpr closed_form_hook(int n, int l);

/// Sum over j_1 < ... < j_m <= n, j_i >= 2i, of prod a_{j_i - 2i + 1} a_{j_i - 2i + 2}.
/// Throws InvalidInput unless 0 <= m <= n/2.
ZExpr closed_form_tworow(int n, int m);

}  // namespace qsig
