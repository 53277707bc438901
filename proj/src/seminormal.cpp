#include "qsig/seminormal.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <deque>
#include <map>
#include <optional>

#include "qsig/errors.hpp"

namespace qsig {

namespace {

using Real = boost::multiprecision::mpfr_float;

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(Real::default_precision()) {
    if (bits < 32) throw InvalidInput("oracle precision must be at least 32 bits");
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const BigInt& x) { return Real(x.get_str()); }

Real pi() {
  static thread_local std::map<unsigned, Real> cache;
  unsigned prec = Real::default_precision();
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, boost::multiprecision::acos(Real(-1))).first;
  return it->second;
}

// sin(pi x) and cos(pi x), reduced exactly modulo 2 first.
Real sin_pi(const Rational& x) {
  BigInt k = rat_floor(x);
  Rational f = x - Rational(k);
  Real s = boost::multiprecision::sin(pi() * to_real(f.num()) / to_real(f.den()));
  return mpz_odd_p(k.get_mpz_t()) ? Real(-s) : s;
}

Real cos_pi(const Rational& x) {
  BigInt k = rat_floor(x);
  Rational f = x - Rational(k);
  Real s = boost::multiprecision::cos(pi() * to_real(f.num()) / to_real(f.den()));
  return mpz_odd_p(k.get_mpz_t()) ? Real(-s) : s;
}

// [[m]] at q = exp(pi i c); [[0]] is read as 1 (a_0 convention).
Real balanced_bracket(long m, const Rational& c) {
  if (m == 0 || m == 1) return Real(1);
  return sin_pi(c * Rational(m)) / sin_pi(c);
}

Real margin(int bits) { return boost::multiprecision::pow(Real(2), -bits / 2); }

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Cx& a) { return boost::multiprecision::sqrt(a.re * a.re + a.im * a.im); }

// exp(2 pi i x)
Cx unit(const Rational& x) { return {cos_pi(x * Rational(2)), sin_pi(x * Rational(2))}; }

using Matrix = std::vector<std::vector<Cx>>;

Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Cx>(n, Cx{Real(0), Real(0)})); }

Matrix identity_times(std::size_t n, const Cx& v) {
  Matrix m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = v;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix r = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].re == 0 && a[i][k].im == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = r[i][j] + b[i][j];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = r[i][j] - b[i][j];
  return r;
}

Real max_abs(const Matrix& m) {
  Real best(0);
  for (const auto& row : m)
    for (const auto& x : row) {
      Real a = abs(x);
      if (a > best) best = a;
    }
  return best;
}

bool near(const Matrix& a, const Matrix& b, const Real& tol) {
  Real scale = 1 + (max_abs(a) > max_abs(b) ? max_abs(a) : max_abs(b));
  return max_abs(a - b) <= tol * scale;
}

// Label i sits in a strictly higher row than i+1.
bool dominates_at(const StandardTableau& t, int i) { return t.cell_of(i).row < t.cell_of(i + 1).row; }

// rho for the pair {t, t(i,i+1)}, read off the dominant member.
long axial_distance(const StandardTableau& t, int i) {
  auto d = t.content_vector();
  long rho = d[i - 1] - d[i];
  return dominates_at(t, i) ? rho : -rho;
}

}  // namespace

SeminormalReport seminormal_report(const Partition& shape, const HeckeParam& p, int bits) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  PrecisionScope scope(bits);
  const Rational& c = p.c();
  auto tabs = enumerate_syt(shape);
  std::map<StandardTableau, std::size_t> index;
  for (std::size_t k = 0; k < tabs.size(); ++k) index.emplace(tabs[k], k);

  Real eps = margin(bits);
  std::vector<std::optional<Real>> norm(tabs.size());
  Real start(1);
  for (const auto& np : negative_pairs(tabs.front()))
    start *= balanced_bracket(-np.delta + 1, c) * balanced_bracket(-np.delta - 1, c);
  norm[0] = start;

  SeminormalReport rep;
  rep.tableaux = static_cast<int>(tabs.size());
  Real worst(0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    const StandardTableau& s = tabs[k];
    for (int i = 1; i < shape.size(); ++i) {
      if (!s.swap_is_standard(i)) continue;
      std::size_t k2 = index.at(s.swapped(i));
      long rho = axial_distance(s, i);
      Real ratio = balanced_bracket(rho - 1, c) * balanced_bracket(rho + 1, c) /
                   (balanced_bracket(rho, c) * balanced_bracket(rho, c));
      Real next = dominates_at(s, i) ? Real(*norm[k] * ratio) : Real(*norm[k] / ratio);
      if (boost::multiprecision::abs(next) < eps)
        throw DegenerateParameter("insufficient precision / near-degenerate norm");
      if (!norm[k2]) {
        norm[k2] = next;
        queue.push_back(k2);
      } else {
        Real a = boost::multiprecision::abs(next), b = boost::multiprecision::abs(*norm[k2]);
        Real rel = boost::multiprecision::abs(next - *norm[k2]) / (a > b ? a : b);
        if (rel > worst) worst = rel;
        ++rep.edges_checked;
        if (rel > eps) throw ConsistencyError("seminormal norms depend on the propagation path");
      }
    }
  }
  for (const auto& x : norm) {
    if (boost::multiprecision::abs(*x) < eps) throw DegenerateParameter("insufficient precision / near-degenerate norm");
    rep.signature += *x > 0 ? 1 : -1;
  }
  rep.max_relative_discrepancy = worst.convert_to<double>();
  return rep;
}

bool action_relations_check(const Partition& shape, const HeckeParam& p, int bits) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  PrecisionScope scope(bits);
  const Rational& c = p.c();
  auto tabs = enumerate_syt(shape);
  std::map<StandardTableau, std::size_t> index;
  for (std::size_t k = 0; k < tabs.size(); ++k) index.emplace(tabs[k], k);
  std::size_t dim = tabs.size();
  const Cx one{Real(1), Real(0)};
  const Cx Q = unit(c);
  auto qint = [&](long m) { return (unit(c * Rational(m)) - one) / (Q - one); };

  // Row convention: row s holds the coefficients of f_s T_i.
  std::vector<Matrix> gens;
  for (int i = 1; i < shape.size(); ++i) {
    Matrix m = zeros(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto& s = tabs[k];
      Cell a = s.cell_of(i), b = s.cell_of(i + 1);
      if (a.row == b.row) {
        m[k][k] = Q;
        continue;
      }
      if (a.col == b.col) {
        m[k][k] = Cx{Real(-1), Real(0)};
        continue;
      }
      std::size_t k2 = index.at(s.swapped(i));
      long rho = axial_distance(s, i);
      Cx br = qint(rho);
      if (dominates_at(s, i)) {
        m[k][k] = Cx{Real(0), Real(0)} - one / br;
        m[k][k2] = one;
      } else {
        m[k][k] = unit(c * Rational(rho)) / br;
        m[k][k2] = Q * qint(rho + 1) * qint(rho - 1) / (br * br);
      }
    }
    gens.push_back(std::move(m));
  }

  Real tol = margin(bits);
  Matrix zero = zeros(dim);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Matrix& g = gens[i];
    if (!near((g + identity_times(dim, one)) * (g - identity_times(dim, Q)), zero, tol)) return false;
    if (i + 1 < gens.size()) {
      const Matrix& h = gens[i + 1];
      if (!near(g * h * g, h * g * h, tol)) return false;
    }
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (!near(g * gens[j], gens[j] * g, tol)) return false;
  }
  return true;
}

}  // namespace qsig
