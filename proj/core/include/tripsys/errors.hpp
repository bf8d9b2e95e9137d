#pragma once

#include <stdexcept>
#include <string>

namespace tripsys {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the sizes the exact algorithms accept.
class UnsupportedSize : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Quantity is undefined for the input (e.g. cover number of an empty family).
class UndefinedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A structural fact that must hold for every valid catalog was violated.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tripsys
