#include "qsig/tableau.hpp"

#include <sstream>

#include "qsig/errors.hpp"

namespace qsig {

namespace {

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  return lens;
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), shape_(row_lengths(rows_)) {
  int n = shape_.size();
  cells_.assign(static_cast<std::size_t>(n), Cell{-1, -1});
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = 0; c < shape_[r]; ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > n || cells_[v - 1].row >= 0) throw InvalidInput("tableau filling is not a bijection onto 1..n");
      cells_[v - 1] = Cell{r, c};
      if (c > 0 && rows_[r][c - 1] >= v) throw InvalidInput("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw InvalidInput("tableau columns must increase");
    }
  }
}

std::vector<int> StandardTableau::content_vector() const {
  std::vector<int> d;
  d.reserve(cells_.size());
  for (const Cell& x : cells_) d.push_back(x.col - x.row);
  return d;
}

bool StandardTableau::swap_is_standard(int i) const {
  Cell a = cell_of(i), b = cell_of(i + 1);
  return a.row != b.row && a.col != b.col;
}

StandardTableau StandardTableau::swapped(int i) const {
  auto rows = rows_;
  Cell a = cell_of(i), b = cell_of(i + 1);
  rows[a.row][a.col] = i + 1;
  rows[b.row][b.col] = i;
  return StandardTableau(std::move(rows));
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << ";";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
  }
  os << ")";
  return os.str();
}

namespace {

void syt_rec(const Partition& shape, int label, std::vector<std::vector<int>>& rows,
             std::vector<StandardTableau>& out) {
  if (label > shape.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int r = 0; r < shape.rows(); ++r) {
    int c = static_cast<int>(rows[r].size());
    if (c == shape[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= c) continue;
    rows[r].push_back(label);
    syt_rec(shape, label + 1, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  syt_rec(shape, 1, rows, out);
  return out;
}

StandardTableau row_reading_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : shape.parts()) {
    rows.emplace_back();
    for (int c = 0; c < p; ++c) rows.back().push_back(next++);
  }
  return StandardTableau(std::move(rows));
}

std::vector<NegativePair> negative_pairs(const StandardTableau& t) {
  std::vector<int> d = t.content_vector();
  std::vector<NegativePair> out;
  int n = t.size();
  for (int l = 1; l <= n; ++l)
    for (int i = l + 1; i <= n; ++i)
      if (d[i - 1] < d[l - 1]) out.push_back({l, i, d[i - 1] - d[l - 1]});
  return out;
}

std::vector<NegativePair> above_right_pairs(const StandardTableau& t) {
  std::vector<NegativePair> out;
  int n = t.size();
  for (int l = 1; l <= n; ++l) {
    for (int i = l + 1; i <= n; ++i) {
      Cell a = t.cell_of(l), b = t.cell_of(i);
      if (a.row < b.row && a.col >= b.col)
        out.push_back({l, i, (b.col - b.row) - (a.col - a.row)});
    }
  }
  return out;
}

}  // namespace qsig
