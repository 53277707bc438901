#include "qsig/zexpr.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "qsig/errors.hpp"

namespace qsig {

ZExpr ZExpr::constant(const BigInt& c) {
  ZExpr e;
  e.add_term({}, c);
  return e;
}

ZExpr ZExpr::product_of(const std::vector<int>& indices) {
  SignMonomial m;
  for (int i : indices) {
    if (i < 0) throw InvalidInput("sign symbol index must be nonnegative");
    if (i <= 1) continue;
    auto it = std::lower_bound(m.begin(), m.end(), i);
    if (it != m.end() && *it == i)
      m.erase(it);
    else
      m.insert(it, i);
  }
  ZExpr e;
  e.add_term(m, 1);
  return e;
}

BigInt ZExpr::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

void ZExpr::add_term(const SignMonomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZExpr& ZExpr::operator+=(const ZExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZExpr operator-(const ZExpr& a, const ZExpr& b) {
  ZExpr r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

SignMonomial monomial_product(const SignMonomial& a, const SignMonomial& b) {
  SignMonomial r;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

ZExpr operator*(const ZExpr& a, const ZExpr& b) {
  ZExpr r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

std::string ZExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "*a" : "a") << m[k];
  }
  return os.str();
}

BigInt zexpr_eval(const ZExpr& e, const std::map<int, int>& signs) {
  BigInt total = 0;
  for (const auto& [m, c] : e.terms()) {
    int s = 1;
    for (int i : m) {
      auto it = signs.find(i);
      if (it == signs.end())
        throw std::out_of_range("no sign assigned to a" + std::to_string(i));
      if (it->second != 1 && it->second != -1)
        throw InvalidInput("sign assignment must be +1 or -1");
      s *= it->second;
    }
    total += s > 0 ? c : BigInt(-c);
  }
  return total;
}

}  // namespace qsig
