#pragma once

#include <stdexcept>

namespace avq {

/// A computed value contradicts a structural invariant of the engine itself,
/// as opposed to a bad argument. The CLI maps this to exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Candidate arithmetic is inconsistent (for example a degree that is not
/// divisible by d!). Signals an impossible candidate, not a usage error.
class ArithmeticConsistencyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace avq
