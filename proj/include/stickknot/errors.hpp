#ifndef STICKKNOT_ERRORS_HPP
#define STICKKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stickknot {

/// Malformed input: unparsable files, bad arguments, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometric degeneracy (collinear frame, non-generic projection, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource guard tripped (skein crossing budget, sampler attempts).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bound intervals that contradict each other.
class InconsistentDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stickknot

#endif  // STICKKNOT_ERRORS_HPP
