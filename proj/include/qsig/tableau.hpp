#pragma once

#include <vector>

#include "qsig/partition.hpp"

namespace qsig {

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A pair of labels l < i (1-based) whose contents satisfy d_i - d_l = delta < 0.
struct NegativePair {
  int l = 0;
  int i = 0;
  int delta = 0;
  friend bool operator==(const NegativePair&, const NegativePair&) = default;
};

/// Standard Young tableau. Labels are 1..n; rows and columns are 0-based.
class StandardTableau {
 public:
  /// Throws InvalidInput unless the filling is standard for its row lengths.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Cell holding the given label.
  Cell cell_of(int label) const { return cells_[static_cast<std::size_t>(label - 1)]; }

  /// d_i = col(i) - row(i), i = 1..n.
  std::vector<int> content_vector() const;

  /// Swaps labels i and i+1; the result need not be standard.
  bool swap_is_standard(int i) const;
  StandardTableau swapped(int i) const;

  std::string to_string() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> cells_;
  Partition shape_;
};

/// All standard tableaux of the shape. Ordered lexicographically by the row
/// sequence (row of label 1, row of label 2, ...), so the row-reading filling comes first.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// Row-reading tableau: 1..lambda_1 in the first row and so on.
StandardTableau row_reading_tableau(const Partition& shape);

std::vector<NegativePair> negative_pairs(const StandardTableau& t);

/// Pairs l < i with the cell of l strictly above and weakly right of the cell of i.
std::vector<NegativePair> above_right_pairs(const StandardTableau& t);

}  // namespace qsig
