#pragma once

#include <utility>
#include <vector>

namespace qsig {

/// One-line notation, images 1..n.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless images form a bijection on 1..n.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Advances to the lexicographically next permutation; false after the last.
  bool next();

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermStats {
  std::vector<int> descents;                     // i with sigma(i) > sigma(i+1)
  std::vector<std::pair<int, int>> inversions;   // (s, t), s < t, sigma(s) > sigma(t)
  int special_inversions = 0;                    // inversions with d_t - d_s in {0, -1}
};

/// Throws InvalidInput on a length mismatch.
PermStats perm_stats(const Permutation& sigma, const std::vector<int>& content);

}  // namespace qsig
