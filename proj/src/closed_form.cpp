// Closed form of the signature character by tail splitting.
//
// Basis vectors are indexed by difference variables D_0 = g_1, D_j = g_{j+1} - g_j,
// with weight sum_j (n - j) D_j. For each tableau every variable gets a bound B_j
// beyond which all floor terms touching it are saturated, so the sign no longer
// depends on D_j. Each D_j ranges over 0..B_j - 1 ("small") or is "large", in which
// case its geometric tail sums to t^{(n-j) B_j} / (1 - t^{n-j}).
//
// For a fixed assignment the sum over restricted permutations only depends on
// which neighbours are tied (D_j = 0) and on the parity flip each pair picks up
// when it is an inversion; that sum is computed by a subset DP and memoized.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_map>

#include "qsig/cherednik.hpp"
#include "qsig/errors.hpp"
#include "sign_data.hpp"

namespace qsig {

namespace {

long clamp_min(long a, long b) { return std::max(0L, std::min(a, b)); }

class PermutationSum {
 public:
  explicit PermutationSum(int n) : n_(n), pairs_(n * (n - 1) / 2), pair_index_(static_cast<std::size_t>(n * n), -1) {
    int k = 0;
    for (int s = 0; s < n; ++s)
      for (int u = s + 1; u < n; ++u) pair_index_[s * n + u] = k++;
    key_bits_ = (n - 1) + pairs_;
    if (key_bits_ <= 20) table_.assign(std::size_t{1} << key_bits_, kUnset);
  }

  int pair_index(int s, int u) const { return pair_index_[s * n_ + u]; }

  // Sum over permutations respecting ties of (-1)^{number of inversions (s,u) with flip bit set}.
  std::int64_t operator()(std::uint32_t ties, std::uint64_t flips) {
    std::uint64_t key = (flips << (n_ - 1)) | ties;
    if (!table_.empty()) {
      auto& slot = table_[key];
      if (slot == kUnset) slot = compute(ties, flips);
      return slot;
    }
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    std::int64_t v = compute(ties, flips);
    map_.emplace(key, v);
    return v;
  }

 private:
  static constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();

  // Values are placed in increasing order; placing position p after the set `mask`
  // creates the inversions (p, q) for q in mask with q > p.
  std::int64_t compute(std::uint32_t ties, std::uint64_t flips) const {
    std::size_t full = (std::size_t{1} << n_) - 1;
    std::vector<std::int64_t> dp(full + 1, 0);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (dp[mask] == 0) continue;
      for (int p = 0; p < n_; ++p) {
        if (mask >> p & 1U) continue;
        if (p > 0 && (ties >> (p - 1) & 1U) && !(mask >> (p - 1) & 1U)) continue;
        int parity = 0;
        for (int q = p + 1; q < n_; ++q)
          if (mask >> q & 1U) parity ^= static_cast<int>(flips >> pair_index(p, q) & 1U);
        dp[mask | (std::size_t{1} << p)] += parity ? -dp[mask] : dp[mask];
      }
    }
    return dp[full];
  }

  int n_;
  int pairs_;
  std::vector<int> pair_index_;
  int key_bits_;
  std::vector<std::int64_t> table_;
  std::unordered_map<std::uint64_t, std::int64_t> map_;
};

struct TableauPlan {
  detail::SignData data;
  std::vector<long> bound;  // B_j
};

TableauPlan plan_for(const StandardTableau& t, const Rational& c) {
  TableauPlan plan{detail::SignData(t, c), {}};
  const auto& sd = plan.data;
  int n = sd.n;
  plan.bound.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    long m = 0;
    for (int i = j; i < n; ++i) m = std::max(m, sd.term[i]);
    if (j > 0)
      for (int s = 0; s < j; ++s)
        for (int u = j; u < n; ++u) m = std::max({m, sd.lower[s * n + u], sd.upper[s * n + u]});
    plan.bound[j] = m + 2;
  }
  return plan;
}

// Accumulates sum over assignments of sign * W * t^weight, bucketed by the set L of large variables.
class Accumulator {
 public:
  Accumulator(int n, std::size_t max_weight)
      : buckets_(std::size_t{1} << n, std::vector<std::int64_t>(max_weight + 1, 0)) {}

  void add(std::uint32_t large, std::size_t weight, std::int64_t v) { buckets_[large][weight] += v; }

  void merge(const Accumulator& o) {
    for (std::size_t l = 0; l < buckets_.size(); ++l)
      for (std::size_t w = 0; w < buckets_[l].size(); ++w) buckets_[l][w] += o.buckets_[l][w];
  }

  const std::vector<std::vector<std::int64_t>>& buckets() const { return buckets_; }

 private:
  std::vector<std::vector<std::int64_t>> buckets_;
};

// All assignments for one tableau with D_0 fixed.
void run_task(const TableauPlan& plan, long d0, PermutationSum& wsum, Accumulator& acc) {
  const auto& sd = plan.data;
  int n = sd.n;
  std::vector<long> D(static_cast<std::size_t>(n), 0), g(static_cast<std::size_t>(n), 0);
  D[0] = d0;
  while (true) {
    std::uint32_t large = 0, ties = 0;
    std::size_t weight = 0;
    long run = 0;
    for (int j = 0; j < n; ++j) {
      if (D[j] == plan.bound[j]) large |= 1U << j;
      if (j > 0 && D[j] == 0) ties |= 1U << (j - 1);
      weight += static_cast<std::size_t>((n - j) * D[j]);
      run += D[j];
      g[j] = run;
    }
    long parity = 0;
    std::uint64_t flips = 0;
    for (int i = 0; i < n; ++i) parity += clamp_min(g[i], sd.term[i]);
    for (int s = 0; s < n; ++s)
      for (int u = s + 1; u < n; ++u) {
        long gap = g[u] - g[s];
        long a = sd.lower[s * n + u], b = sd.upper[s * n + u];
        long plain = clamp_min(gap, a) + clamp_min(gap, b);
        long inverted = clamp_min(gap - 1, a) + clamp_min(gap - 1, b);
        parity += plain;
        if ((plain - inverted) & 1L) flips |= std::uint64_t{1} << wsum.pair_index(s, u);
      }
    std::int64_t w = wsum(ties, flips);
    if (w != 0) acc.add(large, weight, parity % 2 == 0 ? w : -w);

    int j = 1;
    while (j < n && D[j] == plan.bound[j]) D[j++] = 0;
    if (j >= n) break;
    ++D[j];
  }
}

}  // namespace

IntPoly character_numerator(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts) {
  if (shape.size() != p.n()) throw InvalidInput("parameter was validated for a different n");
  int n = shape.size();
  if (n > 10) throw InvalidInput("closed form supports shapes of size at most 10");
  std::vector<TableauPlan> plans;
  std::size_t max_weight = 0;
  for (const auto& t : enumerate_syt(shape)) {
    plans.push_back(plan_for(t, p.c()));
    std::size_t w = 0;
    for (int j = 0; j < n; ++j) w += static_cast<std::size_t>((n - j) * plans.back().bound[j]);
    max_weight = std::max(max_weight, w);
  }

  struct Task {
    std::size_t plan;
    long d0;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < plans.size(); ++k)
    for (long d0 = 0; d0 <= plans[k].bound[0]; ++d0) tasks.push_back({k, d0});

  unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<Accumulator> accs(jobs, Accumulator(n, max_weight));
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    PermutationSum wsum(n);
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();)
      run_task(plans[tasks[k].plan], tasks[k].d0, wsum, accs[id]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  for (unsigned id = 1; id < jobs; ++id) accs[0].merge(accs[id]);

  // Common denominator prod_{k=1}^n (1 - t^k); bucket L carries prod_{j not in L} (1 - t^{n-j}).
  IntPoly total;
  const auto& buckets = accs[0].buckets();
  for (std::uint32_t large = 0; large < buckets.size(); ++large) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(buckets[large].size());
    for (std::int64_t v : buckets[large]) coeffs.emplace_back(static_cast<long>(v));
    IntPoly part(std::move(coeffs));
    if (part.is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!(large >> j & 1U)) part = part * IntPoly::one_minus_t_power(static_cast<std::size_t>(n - j));
    total += part;
  }

  // (1 - t^k) = (1 - t) [k]_t, so the numerator over (1 - t)^n is total / prod [k]_t.
  for (int k = 2; k <= n; ++k) {
    IntPoly qk(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
    IntPoly quo, rem;
    if (!divide_exact(total, qk, quo, rem) || !rem.is_zero())
      throw ConsistencyError("closed form numerator is not divisible by [" + std::to_string(k) + "]_t");
    total = std::move(quo);
  }
  return total;
}

RatFun character_closed(const Partition& shape, const RcaParam& p, const ClosedFormOptions& opts) {
  IntPoly num = character_numerator(shape, p, opts);
  RatFun r = RatFun::normalize(num, IntPoly::one_minus_t_power(1, static_cast<std::size_t>(shape.size())));
  const IntPoly& den = r.denominator();
  IntPoly quo, rem;
  if (!divide_exact(IntPoly::one_minus_t_power(1, static_cast<std::size_t>(shape.size())), den, quo, rem) ||
      !rem.is_zero())
    throw ConsistencyError("reduced denominator does not divide (1-t)^n");
  return r;
}

}  // namespace qsig
