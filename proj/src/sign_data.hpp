#pragma once

#include <vector>

#include "qsig/rational.hpp"
#include "qsig/tableau.hpp"

namespace qsig::detail {

// Floor thresholds of one tableau at a fixed c, clamped below at 0.
// Positions are 0-based; pair arrays are n*n, row s, column u > s.
struct SignData {
  SignData(const StandardTableau& t, const Rational& c);

  int n;
  std::vector<int> content;
  std::vector<long> term;    // floor(c d_i)
  std::vector<long> lower;   // floor(c (d_u - d_s - 1))
  std::vector<long> upper;   // floor(c (d_u - d_s + 1))
};

}  // namespace qsig::detail
