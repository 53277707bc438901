#include "qsig/limit.hpp"

#include <functional>
#include <map>

#include "qsig/errors.hpp"
#include "qsig/permutation.hpp"

namespace qsig {

int kj_stat(const std::vector<int>& d, int j) {
  int n = static_cast<int>(d.size());
  if (j < 0 || j >= n) throw InvalidInput("k_j needs 0 <= j <= n-1");
  int k = 0;
  for (int i = j + 1; i <= n; ++i)
    if (d[i - 1] < 0) ++k;
  for (int s = 1; s <= j; ++s)
    for (int t = j + 1; t <= n; ++t) {
      int delta = d[t - 1] - d[s - 1];
      if (delta == 0 || delta == -1) ++k;
    }
  return k;
}

int kj_stat(const StandardTableau& t, int j) { return kj_stat(t.content_vector(), j); }

RatFun limit_character(const Partition& shape) {
  int n = shape.size();
  if (n < 1) throw InvalidInput("shape must be nonempty");
  RatFun total;
  for (const auto& tab : enumerate_syt(shape)) {
    std::vector<int> d = tab.content_vector();
    std::vector<int> eps(static_cast<std::size_t>(n));
    IntPoly den = IntPoly::constant(1);
    for (int j = 0; j < n; ++j) {
      eps[j] = kj_stat(d, j) % 2 == 0 ? 1 : -1;
      den = den * (IntPoly::constant(1) - IntPoly::monomial(eps[j], static_cast<std::size_t>(n - j)));
    }
    std::vector<BigInt> num(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
    Permutation sigma = Permutation::identity(n);
    do {
      PermStats st = perm_stats(sigma, d);
      int sign = st.special_inversions % 2 == 0 ? 1 : -1;
      std::size_t power = 0;
      for (int i : st.descents) {
        sign *= eps[i];
        power += static_cast<std::size_t>(n - i);
      }
      num[power] += sign;
    } while (sigma.next());
    total += RatFun::normalize(IntPoly(std::move(num)), den);
  }
  return total;
}

namespace {

// 1/(1+t^n) * prod_{j<n} (1+t^j)/(1-t^j)
RatFun sign_rep_prefactor(int n) {
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1) + IntPoly::monomial(1, static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) {
    num = num * (IntPoly::constant(1) + IntPoly::monomial(1, static_cast<std::size_t>(j)));
    den = den * IntPoly::one_minus_t_power(static_cast<std::size_t>(j));
  }
  return RatFun::normalize(num, den);
}

void compositions_rec(int remaining, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (int k = 1; k <= remaining; ++k) {
    cur.push_back(k);
    compositions_rec(remaining - k, cur, visit);
    cur.pop_back();
  }
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// prod_{i=1}^{s} (-t^{K_i}) / (1 + t^{K_i}) with K_i = k_i + ... + k_s, k = (k_0, ..., k_s).
RatFun alternating_tails(const std::vector<int>& k) {
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  int tail = 0;
  for (std::size_t i = k.size(); i-- > 1;) {
    tail += k[i];
    num = num * IntPoly::monomial(-1, static_cast<std::size_t>(tail));
    den = den * (IntPoly::constant(1) + IntPoly::monomial(1, static_cast<std::size_t>(tail)));
  }
  return RatFun::normalize(num, den);
}

}  // namespace

RatFun limit_sign_rep_closed(int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  RatFun bracket;
  std::vector<int> cur;
  compositions_rec(n, cur, [&](const std::vector<int>& k) {
    BigInt multinomial = factorial(n);
    for (int x : k) multinomial /= factorial(x);
    int s = static_cast<int>(k.size()) - 1;
    std::size_t power = 0;
    IntPoly den = IntPoly::constant(1);
    int tail = 0;
    for (int i = s; i >= 1; --i) {
      power += static_cast<std::size_t>(i * k[i]);
      tail += k[i];
      den = den * (IntPoly::constant(1) + IntPoly::monomial(1, static_cast<std::size_t>(tail)));
    }
    BigInt coeff = s % 2 == 0 ? multinomial : BigInt(-multinomial);
    bracket += RatFun::normalize(IntPoly::monomial(coeff, power), den);
  });
  return sign_rep_prefactor(n) * bracket;
}

namespace {

using Exponents = std::vector<int>;
using MultiPoly = std::map<Exponents, BigInt>;

// P_n(x_0, ..., x_s) by inclusion-exclusion over nonempty subsets of the variables.
MultiPoly positive_part_power(int n, int vars) {
  MultiPoly total;
  for (unsigned subset = 1; subset < (1U << vars); ++subset) {
    MultiPoly power{{Exponents(static_cast<std::size_t>(vars), 0), BigInt(1)}};
    for (int step = 0; step < n; ++step) {
      MultiPoly next;
      for (const auto& [e, c] : power)
        for (int v = 0; v < vars; ++v) {
          if (!(subset >> v & 1U)) continue;
          Exponents e2 = e;
          ++e2[v];
          next[e2] += c;
        }
      power = std::move(next);
    }
    int missing = vars - __builtin_popcount(subset);
    for (const auto& [e, c] : power) total[e] += missing % 2 == 0 ? c : BigInt(-c);
  }
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

void increasing_rec(int len, int lo, int hi, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == len) {
    visit(cur);
    return;
  }
  for (int a = lo; a <= hi; ++a) {
    cur.push_back(a);
    increasing_rec(len, a + 1, hi, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

RatFun strict_sequence_form(int n, int depth) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  RatFun bracket = RatFun(IntPoly::constant(1));
  std::vector<MultiPoly> polys(static_cast<std::size_t>(n));
  for (int s = 1; s <= n - 1; ++s) {
    polys[s] = positive_part_power(n, s + 1);
    for (const auto& [e, c] : polys[s]) {
      for (int v = 0; v <= s; ++v)
        if (e[v] == 0) throw ConsistencyError("inclusion-exclusion left a monomial with a zero exponent");
      bracket += RatFun(IntPoly::constant(c)) * alternating_tails(e);
    }
  }

  if (depth > 0) {
    std::vector<BigInt> direct(static_cast<std::size_t>(depth + 1));
    direct[0] = 1;
    for (int s = 1; s <= n - 1; ++s) {
      std::vector<int> cur;
      increasing_rec(s, 1, depth, cur, [&](const std::vector<int>& alpha) {
        int sign = alpha.back() % 2 == 0 ? 1 : -1;
        for (const auto& [e, c] : polys[s]) {
          long power = 0;
          for (int v = 1; v <= s; ++v) power += static_cast<long>(e[v]) * alpha[v - 1];
          if (power <= depth) direct[static_cast<std::size_t>(power)] += sign > 0 ? c : BigInt(-c);
        }
      });
    }
    if (series_expand(bracket, static_cast<std::size_t>(depth + 1)) != direct)
      throw ConsistencyError("geometric resummation disagrees with the truncated direct sum");
  }
  return sign_rep_prefactor(n) * bracket;
}

}  // namespace qsig
