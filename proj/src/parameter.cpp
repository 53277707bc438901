#include "qsig/parameter.hpp"

#include "qsig/errors.hpp"

namespace qsig {

std::optional<int> excluded_denominator(const Rational& c, int max_m) {
  for (int m = 1; m <= max_m; ++m)
    if ((c * Rational(m)).is_integer()) return m;
  return std::nullopt;
}

std::string degenerate_message(const Rational& c, int m) {
  return "degenerate parameter c = " + c.to_string() + " (excluded point r/m, m=" + std::to_string(m) + ")";
}

void require_generic(const Rational& c, int max_m) {
  if (auto m = excluded_denominator(c, max_m)) throw DegenerateParameter(degenerate_message(c, *m));
}

}  // namespace qsig
