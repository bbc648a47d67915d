#pragma once

#include <stdexcept>
#include <string>

namespace mi {

// Malformed or out-of-range input. Distinct from a "dependent" answer.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition (e.g. asked for the circuit of
// an independent set).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed. Indicates a solver bug or a non-matroid
// oracle.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mi
