#include "qsig/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "qsig/errors.hpp"

namespace qsig {

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  bool ok;
  if (slash == std::string_view::npos) {
    ok = parse_integer(s, num);
  } else {
    std::string_view d = s.substr(slash + 1);
    ok = parse_integer(s.substr(0, slash), num) && !d.empty() && d[0] != '-' && d[0] != '+' &&
         parse_integer(d, den);
  }
  if (!ok) throw InvalidInput("cannot parse rational '" + std::string(text) + "'");
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt rat_floor(const Rational& x) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

long floor_long(const Rational& x) {
  BigInt f = rat_floor(x);
  if (!f.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
  return f.get_si();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qsig
