#include "qsig/rat_fun.hpp"

#include <stdexcept>

namespace qsig {

RatFun RatFun::normalize(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFun r;
  if (num.is_zero()) return r;
  IntPoly g = gcd(num, den);
  IntPoly qn, qd, rem;
  if (!divide_exact(num, g, qn, rem) || !rem.is_zero())
    throw std::logic_error("gcd does not divide numerator");
  if (!divide_exact(den, g, qd, rem) || !rem.is_zero())
    throw std::logic_error("gcd does not divide denominator");
  BigInt cn = qn.content(), cd = qd.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (qd.leading() < 0) c = -c;
  qn.divide_exact(c);
  qd.divide_exact(c);
  r.num_ = std::move(qn);
  r.den_ = std::move(qd);
  return r;
}

std::optional<std::size_t> RatFun::one_minus_t_exponent() const {
  std::size_t k = static_cast<std::size_t>(den_.degree());
  if (k == 0) return std::nullopt;
  IntPoly target = IntPoly::one_minus_t_power(1, k);
  if (den_ == target || den_ == -target) return k;
  return std::nullopt;
}

RatFun RatFun::reflect() const { return normalize(num_.reflect(), den_.reflect()); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun::normalize(a.num_ + b.num_, a.den_);
  return RatFun::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFun::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
  if (den_ == IntPoly::constant(1)) return num_.to_string();
  if (auto k = one_minus_t_exponent()) {
    IntPoly n = den_.leading() == IntPoly::one_minus_t_power(1, *k).leading() ? num_ : -num_;
    return "(" + n.to_string() + ")/(1-t)^" + std::to_string(*k);
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::vector<Rational> series_expand_rational(const RatFun& r, std::size_t n_terms) {
  const IntPoly& d = r.denominator();
  BigInt d0 = d.coeff(0);
  if (d0 == 0) throw std::domain_error("series expansion needs a nonzero constant term");
  std::vector<Rational> out(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    Rational acc(r.numerator().coeff(k));
    for (std::size_t j = 1; j <= k && j < d.coeffs().size(); ++j)
      acc -= Rational(d.coeffs()[j]) * out[k - j];
    out[k] = acc / Rational(d0);
  }
  return out;
}

std::vector<BigInt> series_expand(const RatFun& r, std::size_t n_terms) {
  const IntPoly& d = r.denominator();
  BigInt d0 = d.coeff(0);
  if (d0 == 0) throw std::domain_error("series expansion needs a nonzero constant term");
  std::vector<BigInt> out(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    BigInt acc = r.numerator().coeff(k);
    for (std::size_t j = 1; j <= k && j < d.coeffs().size(); ++j) acc -= d.coeffs()[j] * out[k - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw std::domain_error("series has non-integral coefficients");
    mpz_divexact(out[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

}  // namespace qsig
