#include <sstream>

#include "qsig/errors.hpp"
#include "qsig/limit.hpp"

namespace qsig {

SymbolicPoly::SymbolicPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void SymbolicPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational SymbolicPoly::eval(const Rational& a) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
  return r;
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

SymbolicPoly operator-(const SymbolicPoly& x, const SymbolicPoly& y) { return x + y * Rational(-1); }

SymbolicPoly operator*(const SymbolicPoly& x, const SymbolicPoly& y) {
  if (x.c_.empty() || y.c_.empty()) return {};
  std::vector<Rational> v(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
  return SymbolicPoly(std::move(v));
}

SymbolicPoly operator*(SymbolicPoly x, const Rational& k) {
  for (auto& c : x.c_) c *= k;
  x.trim();
  return x;
}

std::string SymbolicPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational mag = abs(c_[i]);
    if (first)
      os << (c_[i].sign() < 0 ? "-" : "");
    else
      os << (c_[i].sign() < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag.to_string();
      continue;
    }
    if (mag != Rational(1)) os << mag.to_string() << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

// prod_{j>=1} (1+t^j)/(1-t^j) mod t^order
std::vector<BigInt> signed_partition_series(std::size_t order) {
  std::vector<BigInt> s(order, 0);
  if (order == 0) return s;
  s[0] = 1;
  for (std::size_t j = 1; j < order; ++j) {
    for (std::size_t k = order; k-- > j;) s[k] += s[k - j];  // * (1 + t^j)
    for (std::size_t k = j; k < order; ++k) s[k] += s[k - j];  // / (1 - t^j)
  }
  return s;
}

// [i] = 1 + t + ... + t^{i-1}
IntPoly bracket_poly(int i) { return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(i), BigInt(1))); }

// a (a+1) ... (a+k-1) / k! and a (a-1) ... (a-k+1) / k! as polynomials in a
SymbolicPoly rising_binomial(int k) {
  SymbolicPoly p(std::vector<Rational>{Rational(1)});
  for (int m = 0; m < k; ++m) p = p * SymbolicPoly({Rational(m), Rational(1)}) * (Rational(1) / Rational(m + 1));
  return p;
}

SymbolicPoly falling_binomial(int k) {
  SymbolicPoly p(std::vector<Rational>{Rational(1)});
  for (int m = 0; m < k; ++m) p = p * SymbolicPoly({Rational(-m), Rational(1)}) * (Rational(1) / Rational(m + 1));
  return p;
}

using SymbolicSeries = std::vector<SymbolicPoly>;

SymbolicSeries multiply(const SymbolicSeries& x, const SymbolicSeries& y) {
  SymbolicSeries r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; i + j < x.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

// [i]^a = (1 - t^i)^a (1 - t)^{-a} mod t^order, coefficients polynomial in a
SymbolicSeries symbolic_bracket_power(int i, std::size_t order) {
  SymbolicSeries inv(order), num(order);
  for (std::size_t k = 0; k < order; ++k) inv[k] = rising_binomial(static_cast<int>(k));
  for (std::size_t k = 0; k * static_cast<std::size_t>(i) < order; ++k) {
    SymbolicPoly b = falling_binomial(static_cast<int>(k));
    num[k * static_cast<std::size_t>(i)] = k % 2 == 0 ? b : b * Rational(-1);
  }
  return multiply(num, inv);
}

}  // namespace

std::vector<Rational> stable_series(int a, int n_terms) {
  if (a < 0) throw InvalidInput("rank a must be nonnegative");
  if (n_terms < 0) throw InvalidInput("number of terms must be nonnegative");
  auto order = static_cast<std::size_t>(n_terms);
  IntPoly sum = truncate(IntPoly::constant(1), order);
  IntPoly prev = pow_truncated(bracket_poly(1), static_cast<std::size_t>(a), order);
  // [i+1]^a - [i]^a starts at t^i
  for (int i = 1; static_cast<std::size_t>(i) < order; ++i) {
    IntPoly cur = pow_truncated(bracket_poly(i + 1), static_cast<std::size_t>(a), order);
    IntPoly diff = cur - prev;
    if (i % 2 == 0)
      sum += diff;
    else
      sum -= diff;
    prev = std::move(cur);
  }
  IntPoly prod = truncate(IntPoly(signed_partition_series(order)) * sum, order);
  std::vector<Rational> out;
  for (std::size_t k = 0; k < order; ++k) out.emplace_back(prod.coeff(k));
  return out;
}

std::vector<SymbolicPoly> stable_polys(int max_r) {
  if (max_r < 0) throw InvalidInput("order must be nonnegative");
  std::size_t order = static_cast<std::size_t>(max_r) + 1;
  SymbolicSeries sum(order);
  sum[0] = SymbolicPoly({Rational(1)});
  SymbolicSeries prev = symbolic_bracket_power(1, order);
  for (int i = 1; static_cast<std::size_t>(i) < order; ++i) {
    SymbolicSeries cur = symbolic_bracket_power(i + 1, order);
    for (std::size_t k = 0; k < order; ++k) {
      SymbolicPoly diff = cur[k] - prev[k];
      sum[k] += i % 2 == 0 ? diff : diff * Rational(-1);
    }
    prev = std::move(cur);
  }
  std::vector<BigInt> e = signed_partition_series(order);
  std::vector<SymbolicPoly> out(order);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t j = 0; j <= r; ++j) out[r] += sum[r - j] * Rational(e[j]);
  return out;
}

SymbolicPoly stable_poly(int r) { return stable_polys(r).back(); }

bool hilbert_check(int a, int n_terms) {
  if (a < 1) throw InvalidInput("rank a must be positive");
  if (n_terms < 0) throw InvalidInput("number of terms must be nonnegative");
  auto order = static_cast<std::size_t>(n_terms);
  IntPoly sum = truncate(IntPoly::constant(1), order);
  IntPoly prev = pow_truncated(bracket_poly(1), static_cast<std::size_t>(a), order);
  for (int i = 1; static_cast<std::size_t>(i) <= order; ++i) {
    IntPoly cur = pow_truncated(bracket_poly(i + 1), static_cast<std::size_t>(a), order);
    sum += cur - prev;
    prev = std::move(cur);
  }
  // 1/(1-t)^a has coefficients C(a+k-1, k)
  for (std::size_t k = 0; k < order; ++k) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a) + k - 1, k);
    if (sum.coeff(k) != binom) return false;
  }
  return true;
}

bool euler_sign_check(const Rational& z, int n_factors) {
  if (z.is_integer()) throw InvalidInput("z must not be an integer");
  if (Rational(n_factors) <= abs(z)) throw InvalidInput("need more factors than |z|");
  Rational prod(1), z2 = z * z;
  for (int j = 1; j <= n_factors; ++j) prod *= Rational(1) - z2 / Rational(j * j);
  BigInt f = rat_floor(abs(z));
  int expected = mpz_odd_p(f.get_mpz_t()) ? -1 : 1;
  return prod.sign() == expected;
}

}  // namespace qsig
