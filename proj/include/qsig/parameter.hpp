#pragma once

#include <optional>
#include <string>

#include "qsig/rational.hpp"

namespace qsig {

/// Smallest m in 1..max_m with c*m an integer, if any.
std::optional<int> excluded_denominator(const Rational& c, int max_m);

/// "degenerate parameter c = -1/2 (excluded point r/m, m=2)"
std::string degenerate_message(const Rational& c, int m);

/// Throws DegenerateParameter if c*m is an integer for some 1 <= m <= max_m.
void require_generic(const Rational& c, int max_m);

}  // namespace qsig
