#include "qsig/cherednik.hpp"

#include <algorithm>

#include "qsig/errors.hpp"
#include "qsig/hecke.hpp"
#include "qsig/parameter.hpp"
#include "sign_data.hpp"

namespace qsig {

RcaParam::RcaParam(Rational c, int n) : c_(std::move(c)), kappa_(Rational(-1) / c_), n_(n) {}

RcaParam validate_param(const Rational& c, int n) {
  if (n < 1) throw InvalidInput("shape size must be positive");
  if (c.is_zero()) throw InvalidInput("c must be nonzero");
  if (c.sign() > 0)
    throw InvalidInput("c = " + c.to_string() + " > 0 is not supported; use the conjugate shape with c = " +
                       (-c).to_string());
  require_generic(c, n);
  return RcaParam(c, n);
}

int RcaBasisElement::weight() const {
  int w = 0;
  for (int g : mu) w += g;
  return w;
}

namespace detail {

SignData::SignData(const StandardTableau& t, const Rational& c) : n(t.size()), content(t.content_vector()) {
  auto fl = [&](long x) { return std::max(floor_long(c * Rational(x)), 0L); };
  term.resize(static_cast<std::size_t>(n));
  lower.assign(static_cast<std::size_t>(n * n), 0);
  upper.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) term[i] = fl(content[i]);
  for (int s = 0; s < n; ++s)
    for (int u = s + 1; u < n; ++u) {
      long delta = content[u] - content[s];
      lower[s * n + u] = fl(delta - 1);
      upper[s * n + u] = fl(delta + 1);
    }
}

}  // namespace detail

namespace {

void nondecreasing_rec(int n, int remaining, int lo, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == n) {
    if (remaining == 0) visit(cur);
    return;
  }
  int slots = n - static_cast<int>(cur.size());
  // the remaining entries are all >= g, so slots * g <= remaining
  for (int g = lo; g * slots <= remaining; ++g) {
    cur.push_back(g);
    nondecreasing_rec(n, remaining - g, g, cur, visit);
    cur.pop_back();
  }
}

bool is_restricted(const std::vector<int>& mu, const Permutation& sigma) {
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] == mu[i + 1] && sigma(static_cast<int>(i) + 1) > sigma(static_cast<int>(i) + 2)) return false;
  return true;
}

long clamp_min(long a, long b) { return std::max(0L, std::min(a, b)); }

long statistic(const std::vector<int>& mu, const Permutation& sigma, const detail::SignData& sd) {
  int n = sd.n;
  long f = 0;
  for (int i = 0; i < n; ++i) f += clamp_min(mu[i], sd.term[i]);
  for (int s = 0; s < n; ++s)
    for (int u = s + 1; u < n; ++u) {
      long k = mu[u] - mu[s] - (sigma(s + 1) > sigma(u + 1) ? 1 : 0);
      f += clamp_min(k, sd.lower[s * n + u]) + clamp_min(k, sd.upper[s * n + u]);
    }
  return f;
}

void check_element(const RcaBasisElement& v, const Partition& shape, std::size_t n_tableaux) {
  auto n = static_cast<std::size_t>(shape.size());
  if (v.mu.size() != n || static_cast<std::size_t>(v.sigma.size()) != n)
    throw InvalidInput("basis element has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (v.mu[i] < 0 || (i > 0 && v.mu[i] < v.mu[i - 1])) throw InvalidInput("mu must be nonnegative and nondecreasing");
  if (!is_restricted(v.mu, v.sigma)) throw InvalidInput("permutation is not restricted for mu");
  if (v.tableau >= n_tableaux) throw InvalidInput("tableau index out of range");
}

}  // namespace

void for_each_basis_element(const Partition& shape, int max_wt,
                            const std::function<void(const RcaBasisElement&)>& visit) {
  int n = shape.size();
  std::size_t n_tab = enumerate_syt(shape).size();
  for (int k = 0; k <= max_wt; ++k) {
    std::vector<int> cur;
    nondecreasing_rec(n, k, 0, cur, [&](const std::vector<int>& mu) {
      for (std::size_t t = 0; t < n_tab; ++t) {
        Permutation sigma = Permutation::identity(n);
        do {
          if (is_restricted(mu, sigma)) visit(RcaBasisElement{mu, sigma, t});
        } while (sigma.next());
      }
    });
  }
}

std::vector<RcaBasisElement> basis_enumerate(const Partition& shape, const RcaParam& p, int max_wt) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  std::vector<RcaBasisElement> out;
  for_each_basis_element(shape, max_wt, [&](const RcaBasisElement& v) { out.push_back(v); });
  return out;
}

long sign_statistic(const RcaBasisElement& v, const Partition& shape, const RcaParam& p) {
  auto tabs = enumerate_syt(shape);
  check_element(v, shape, tabs.size());
  return statistic(v.mu, v.sigma, detail::SignData(tabs[v.tableau], p.c()));
}

int basis_sign(const RcaBasisElement& v, const Partition& shape, const RcaParam& p) {
  return sign_statistic(v, shape, p) % 2 == 0 ? 1 : -1;
}

std::vector<BigInt> character_series(const Partition& shape, const RcaParam& p, int n_terms) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  if (n_terms < 0) throw InvalidInput("number of terms must be nonnegative");
  std::vector<detail::SignData> data;
  for (const auto& t : enumerate_syt(shape)) data.emplace_back(t, p.c());
  std::vector<BigInt> out(static_cast<std::size_t>(n_terms));
  if (n_terms == 0) return out;
  for_each_basis_element(shape, n_terms - 1, [&](const RcaBasisElement& v) {
    long f = statistic(v.mu, v.sigma, data[v.tableau]);
    out[static_cast<std::size_t>(v.weight())] += f % 2 == 0 ? 1 : -1;
  });
  return out;
}

long n_max(const Partition& shape, const RcaParam& p) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  long best = 0;
  for (const auto& t : enumerate_syt(shape)) {
    detail::SignData sd(t, p.c());
    for (long x : sd.term) best = std::max(best, x);
    for (long x : sd.lower) best = std::max(best, x);
    for (long x : sd.upper) best = std::max(best, x);
  }
  return best + 2;
}

Rational basis_norm(const RcaBasisElement& v, const Partition& shape, const RcaParam& p) {
  auto tabs = enumerate_syt(shape);
  check_element(v, shape, tabs.size());
  std::vector<int> d = tabs[v.tableau].content_vector();
  const Rational& kappa = p.kappa();
  int n = shape.size();
  Rational prod(1);
  auto mul = [&](const Rational& f) {
    if (f.is_zero()) throw DegenerateParameter("degenerate parameter: a norm factor vanishes at c = " + p.c().to_string());
    prod *= f;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= v.mu[i]; ++j) mul(Rational(d[i]) + Rational(j) * kappa);
    for (int l = 0; l < i; ++l)
      for (int j = 1; j <= v.mu[i] - v.mu[l]; ++j) {
        Rational x = Rational(d[i] - d[l]) + Rational(j) * kappa;
        mul(x * x - Rational(1));
      }
  }
  for (int s = 1; s <= n; ++s)
    for (int u = s + 1; u <= n; ++u) {
      if (v.sigma(s) <= v.sigma(u)) continue;
      Rational x = Rational(d[u - 1] - d[s - 1]) + kappa * Rational(v.mu[u - 1] - v.mu[s - 1]);
      mul(x * x - Rational(1));
    }
  return prod;
}

bool norm_oracle(const Partition& shape, const RcaParam& p, int max_wt) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  bool ok = true;
  for_each_basis_element(shape, max_wt, [&](const RcaBasisElement& v) {
    if (!ok) return;
    if (basis_norm(v, shape, p).sign() != basis_sign(v, shape, p)) ok = false;
  });
  return ok;
}

BigInt asymptotic_signature_direct(const Partition& shape, const RcaParam& p) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  BigInt total = 0;
  for (const auto& t : enumerate_syt(shape)) {
    detail::SignData sd(t, p.c());
    long parity = 0;
    for (long x : sd.term) parity += x;
    for (int s = 0; s < sd.n; ++s)
      for (int u = s + 1; u < sd.n; ++u) parity += sd.lower[s * sd.n + u] + sd.upper[s * sd.n + u];
    total += parity % 2 == 0 ? 1 : -1;
  }
  return total;
}

BigInt asymptotic_signature(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts) {
  BigInt from_closed = character_numerator(shape, p, opts).eval(BigInt(1));
  BigInt direct = asymptotic_signature_direct(shape, p);
  if (from_closed != direct)
    throw ConsistencyError("asymptotic signature mismatch: closed form gives " + from_closed.get_str() +
                           ", tableau product gives " + direct.get_str());
  return direct;
}

BridgeReport bridge_check(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts) {
  BridgeReport r;
  r.asymptotic = asymptotic_signature(shape, p, opts);
  HeckeParam hp(p.c(), shape.size());
  r.hecke_raw = signature_at(shape, hp, SignatureVariant::raw);
  r.hecke_normalized = signature_at(shape, hp, SignatureVariant::normalized);
  r.signed_match_raw = r.asymptotic == r.hecke_raw;
  r.abs_match_raw = abs(r.asymptotic) == abs(r.hecke_raw);
  r.signed_match_normalized = r.asymptotic == r.hecke_normalized;
  r.abs_match_normalized = abs(r.asymptotic) == abs(r.hecke_normalized);
  return r;
}

}  // namespace qsig
