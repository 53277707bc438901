#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsig/rational.hpp"

namespace qsig {

class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);
  /// "2,2,1"
  static Partition parse(std::string_view text);
  /// (1^n)
  static Partition column(int n);
  /// (n)
  static Partition row(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int r) const { return parts_[static_cast<std::size_t>(r)]; }

  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, parts in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// n! / prod of hook lengths.
BigInt syt_count_hook(const Partition& shape);

}  // namespace qsig
