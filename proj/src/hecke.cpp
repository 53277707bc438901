#include "qsig/hecke.hpp"

#include <functional>
#include <map>

#include "qsig/errors.hpp"
#include "qsig/parameter.hpp"

namespace qsig {

HeckeParam::HeckeParam(Rational c, int n) : c_(std::move(c)), n_(n) {
  if (n_ < 1) throw InvalidInput("shape size must be positive");
  require_generic(c_, n_);
}

int sign_bracket(long m, const Rational& c) {
  if (c.is_integer()) throw DegenerateParameter(degenerate_message(c, 1));
  Rational cm = c * Rational(m);
  if (m == 0) throw DegenerateParameter("degenerate bracket [[0]] = 0");
  if (cm.is_integer()) throw DegenerateParameter(degenerate_message(c, static_cast<int>(c.den().get_si())));
  BigInt e = rat_floor(cm) + rat_floor(c);
  return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
}

int sign_bracket(long m, const HeckeParam& p) { return sign_bracket(m, p.c()); }

ZExpr tableau_monomial(const StandardTableau& t) {
  std::vector<int> idx;
  for (const auto& np : negative_pairs(t)) {
    idx.push_back(-np.delta + 1);
    idx.push_back(-np.delta - 1);
  }
  return ZExpr::product_of(idx);
}

ZExpr signature_z_raw(const Partition& shape) {
  ZExpr sum;
  for (const auto& t : enumerate_syt(shape)) sum += tableau_monomial(t);
  return sum;
}

ZExpr signature_z_normalized(const Partition& shape) {
  return signature_z_raw(shape) * tableau_monomial(row_reading_tableau(shape));
}

BigInt signature_at(const Partition& shape, const HeckeParam& p, SignatureVariant variant) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  ZExpr e = variant == SignatureVariant::raw ? signature_z_raw(shape) : signature_z_normalized(shape);
  std::map<int, int> signs;
  for (int i = 2; i <= shape.size(); ++i) signs[i] = sign_bracket(i, p);
  return zexpr_eval(e, signs);
}

namespace {

// Visits every strictly increasing sequence of length k in [lo, n] satisfying ok(position, value).
void increasing_sequences(int k, int lo, int n, const std::function<bool(int, int)>& ok,
                          std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == k) {
    visit(cur);
    return;
  }
  int pos = static_cast<int>(cur.size()) + 1;
  for (int j = lo; j <= n; ++j) {
    if (!ok(pos, j)) continue;
    cur.push_back(j);
    increasing_sequences(k, j + 1, n, ok, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

ZExpr closed_form_hook(int n, int l) {
  if (n < 1 || l < 0 || l > n - 1) throw InvalidInput("hook closed form needs 0 <= l <= n-1");
  ZExpr sum;
  std::vector<int> cur;
  increasing_sequences(l, 2, n, [](int, int) { return true; }, cur, [&](const std::vector<int>& js) {
    std::vector<int> idx;
    for (int j : js) {
      idx.push_back(j - 1);
      idx.push_back(j);
    }
    sum += ZExpr::product_of(idx);
  });
  return sum;
}

ZExpr closed_form_tworow(int n, int m) {
  if (n < 1 || m < 0 || m > n / 2) throw InvalidInput("two-row closed form needs 0 <= m <= n/2");
  ZExpr sum;
  std::vector<int> cur;
  increasing_sequences(m, 1, n, [](int pos, int j) { return j >= 2 * pos; }, cur,
                       [&](const std::vector<int>& js) {
                         std::vector<int> idx;
                         for (std::size_t k = 0; k < js.size(); ++k) {
                           int i = static_cast<int>(k) + 1;
                           idx.push_back(js[k] - (2 * i - 1));
                           idx.push_back(js[k] - 2 * (i - 1));
                         }
                         sum += ZExpr::product_of(idx);
                       });
  return sum;
}

}  // namespace qsig
