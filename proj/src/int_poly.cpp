#include "qsig/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsig {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_t_power(std::size_t k, std::size_t e) {
  IntPoly base = IntPoly::constant(1) - IntPoly::monomial(1, k);
  IntPoly r = IntPoly::constant(1);
  for (std::size_t i = 0; i < e; ++i) r = r * base;
  return r;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

Rational IntPoly::eval(const Rational& t) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + Rational(*it);
  return r;
}

IntPoly IntPoly::reflect() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

IntPoly& IntPoly::divide_exact(const BigInt& k) {
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return *this;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& x = c_[i];
    if (x == 0) continue;
    BigInt mag = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient, IntPoly& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) {
    quotient = IntPoly();
    remainder = a;
    return true;
  }
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t())) return false;
    BigInt f;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), b.leading().get_mpz_t());
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  quotient = IntPoly(std::move(q));
  remainder = IntPoly(std::move(r));
  return true;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  IntPoly r = a;
  const BigInt& lb = b.leading();
  long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    BigInt lr = r.leading();
    r *= lb;
    r -= b.shifted(static_cast<std::size_t>(shift)) * lr;
  }
  return r;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly r = p;
  BigInt g = p.content();
  if (p.leading() < 0) g = -g;
  return r.divide_exact(g);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

IntPoly truncate(const IntPoly& p, std::size_t order) {
  const auto& c = p.coeffs();
  if (c.size() <= order) return p;
  return IntPoly(std::vector<BigInt>(c.begin(), c.begin() + static_cast<long>(order)));
}

IntPoly pow_truncated(const IntPoly& p, std::size_t e, std::size_t order) {
  IntPoly result = truncate(IntPoly::constant(1), order);
  IntPoly base = truncate(p, order);
  while (e > 0) {
    if (e & 1U) result = truncate(result * base, order);
    e >>= 1U;
    if (e > 0) base = truncate(base * base, order);
  }
  return result;
}

}  // namespace qsig
