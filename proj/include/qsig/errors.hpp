#pragma once

#include <stdexcept>
#include <string>

namespace qsig {

// Malformed input: unparseable text, out-of-range arguments.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter sits on an excluded point, or a bracket/factor vanishes exactly.
class DegenerateParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two routes that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qsig
