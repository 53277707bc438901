#include "qsig/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "qsig/errors.hpp"

namespace qsig {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw InvalidInput("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

PermStats perm_stats(const Permutation& sigma, const std::vector<int>& content) {
  if (static_cast<std::size_t>(sigma.size()) != content.size())
    throw InvalidInput("permutation and content vector lengths differ");
  PermStats st;
  int n = sigma.size();
  for (int i = 1; i < n; ++i)
    if (sigma(i) > sigma(i + 1)) st.descents.push_back(i);
  for (int s = 1; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      if (sigma(s) <= sigma(t)) continue;
      st.inversions.emplace_back(s, t);
      int delta = content[t - 1] - content[s - 1];
      if (delta == 0 || delta == -1) ++st.special_inversions;
    }
  }
  return st;
}

}  // namespace qsig
